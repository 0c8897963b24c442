// A lazily built tower of rational function fields with a registry of
// generic symbols.
//
// Stage 0 is a fixed ground field; stage n+1 is the rational function field
// over stage n.  Registering a stage-n scalar s mints the fresh indeterminate
// X[<canonical form of s>] and returns it as a stage-(n+1) scalar, so the
// assignment s -> X_s is injective and each registered value is
// transcendental over the stage it came from.  Stages are never materialized
// beyond the registered symbols.
//
// The registry is the only mutable structure here; callers must serialize
// writes (single-writer), reads after registration are safe to share.
#ifndef NABLAKIT_TOWER_HPP
#define NABLAKIT_TOWER_HPP

#include <map>
#include <string>
#include <vector>

#include "nablakit/grid.hpp"
#include "nablakit/scalar.hpp"

namespace nablakit {

// Strips constant function-field wrappers: a value whose reduced numerator
// and denominator are both variable-free is rewritten in the base field,
// recursively.  The stage of a scalar is defined on this demoted form.
Scalar demote_constants(const Scalar& s);

// Bind registered symbols appearing in a function-field scalar to values and
// reduce.  Bindings for symbols not present are ignored.
Scalar substitute_symbols(const Scalar& s, const std::map<std::string, Scalar>& bindings);

struct TowerWitness {
    std::vector<Scalar> nodes;  // d+2 entries drawn from the sample set
    Scalar value;               // the alternating weighted sum, nonzero
};

class Tower {
public:
    explicit Tower(FieldPtr ground);
    Tower() : Tower(Field::rationals()) {}

    const FieldPtr& ground() const { return ground_; }

    // Number of function-field layers above ground in the demoted
    // representation of s; throws std::invalid_argument when s's field chain
    // does not terminate in the ground field.
    long stage_of(const Scalar& s) const;
    // The stage-n field, built on demand.
    FieldPtr stage_field(size_t n);

    // The generic assignment s -> X_s; idempotent per registered value.
    Scalar apply(const Scalar& s);
    bool is_registered(const Scalar& s) const;
    size_t size() const { return registry_.size(); }

    // The table s -> X_s on a 1-axis grid labeled `axis` over the sample set.
    TabulatedFunction generic_table(const std::vector<Scalar>& sample, const std::string& axis);

    // For distinct same-stage samples with |sample| >= d+2: d+2 nodes plus
    // the nonzero alternating weighted sum of their symbols, certifying that
    // s -> X_s matches no polynomial of degree <= d on the sample.
    TowerWitness nonpoly_certificate(const std::vector<Scalar>& sample, long d);

    // Registry serialization; restore re-registers entries in stage order and
    // validates that symbols regenerate identically.
    std::string dump_json() const;
    static Tower restore_json(const std::string& text, FieldPtr ground);

private:
    struct Entry {
        long stage;
        Scalar element;  // demoted canonical representative
        std::string symbol;
        Scalar image;  // X_s as a stage-(stage+1) scalar
    };

    FieldPtr ground_;
    std::vector<FieldPtr> stages_;  // stages_[n] = stage-n field
    // Key: (stage, canonical element string); value: index into entries_.
    std::map<std::pair<long, std::string>, size_t> registry_;
    std::vector<Entry> entries_;
};

}  // namespace nablakit

#endif
