// Field descriptors for the exact coefficient fields: the rationals, prime
// fields F_p with machine-word p, and iterated rational function fields.
// A Field object carries no elements; Scalars reference their field through
// a shared FieldPtr and all arithmetic validates field compatibility.
#ifndef NABLAKIT_FIELD_HPP
#define NABLAKIT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>

namespace nablakit {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    enum class Kind { Rationals, Prime, Function };

    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    // Rational function field over `base`.  The generator set is open: any
    // named indeterminate may appear in elements, so Q(X) and Q(X,Y) are the
    // same Field object at depth 1.
    static FieldPtr function(const FieldPtr& base);

    Kind kind() const { return kind_; }
    std::uint64_t characteristic_p() const { return p_; }
    const FieldPtr& base() const { return base_; }

    // Number of Function wrappers above the ground field (0 for Q and F_p).
    int depth() const;

    bool equals(const Field& other) const;

    // Walks the base chain of `ext` looking for *this; true when an element of
    // this field embeds canonically into ext.
    bool embeds_into(const Field& ext) const;

    std::string name() const;

private:
    Field(Kind k, std::uint64_t p, FieldPtr base)
        : kind_(k), p_(p), base_(std::move(base)) {}

    Kind kind_;
    std::uint64_t p_;
    FieldPtr base_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// The finer of the two fields when one embeds into the other; throws
// std::invalid_argument on incomparable fields.
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);

}  // namespace nablakit

#endif
