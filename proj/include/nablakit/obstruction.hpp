// Finite retraction-existence instances: given per-axis sample sets, a value
// table H on their union, and a total-degree cap D, compile the polynomial
// identity
//
//   sum_i f_i(t without axis i)(x) + sum_i (x_i - t_i) g_i(t)(x)
//     = prod_i H(t_i)              for every grid point t
//
// into an exact linear system over the coefficient field, decide it, and
// independently compute the alternating-difference product witness whose
// nonvanishing forces infeasibility.  The f_i unknowns are shared across all
// grid points with the same complement coordinates; the g_i are per point.
#ifndef NABLAKIT_OBSTRUCTION_HPP
#define NABLAKIT_OBSTRUCTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nablakit/grid.hpp"
#include "nablakit/linsys.hpp"
#include "nablakit/ramsey.hpp"

namespace nablakit {

class RetractionProblem {
public:
    // Sample sets must be nonempty with distinct entries; h_table must cover
    // every node of every set.
    RetractionProblem(std::vector<std::vector<Scalar>> sample_sets,
                      std::vector<std::pair<Scalar, Scalar>> h_table, unsigned degree_bound);

    size_t axes() const { return sets_.size(); }
    const std::vector<Scalar>& sample(size_t i) const { return sets_.at(i); }
    unsigned degree_bound() const { return bound_; }
    const FieldPtr& field() const { return field_; }
    Scalar h_at(const Scalar& node) const;  // throws std::invalid_argument off-table

private:
    std::vector<std::vector<Scalar>> sets_;
    std::vector<std::pair<Scalar, Scalar>> h_;
    unsigned bound_ = 0;
    FieldPtr field_;
};

// The compiled equations plus the unknown layout needed to read assignments
// back as polynomial coefficients.  Unknown order: all f blocks by axis and
// complement point, then all g blocks by axis and grid point; within a block
// one slot per monomial of total degree <= D.
struct CompiledSystem {
    size_t unknowns = 0;
    std::vector<LinEq> equations;
    std::vector<std::string> labels;      // one per unknown
    std::vector<std::string> provenance;  // one per equation: point and monomial
    FieldPtr field;

    size_t n = 0;
    unsigned degree_bound = 0;
    std::vector<std::vector<unsigned>> monomials;  // total degree <= D, n vars
    std::vector<size_t> sizes;                     // |S_i|
    size_t grid_points = 0;
    std::vector<size_t> f_base, g_base;            // per-axis unknown offsets

    size_t monomial_index(const std::vector<unsigned>& e) const;
    // Flat index of a grid point with the given axis removed.
    size_t complement_index(size_t axis, size_t t_flat) const;
    size_t f_unknown(size_t axis, size_t comp_flat, size_t mon) const;
    size_t g_unknown(size_t axis, size_t t_flat, size_t mon) const;

    std::map<std::vector<unsigned>, size_t> mon_index;
};

CompiledSystem compile(const RetractionProblem& p);

// solve_sparse plus an internal re-verification of feasible assignments.
LinearSolution solve_compiled(const CompiledSystem& sys);

// Residual table t -> sum_i f_i(t without i) evaluated at t, minus
// prod_i H(t_i).  The (x_i - t_i) g_i terms vanish under this evaluation, so
// the residual is identically zero for every satisfying assignment.
TabulatedFunction evaluation_identity(const RetractionProblem& p, const CompiledSystem& sys,
                                      const std::vector<Scalar>& assignment);

// prod_i of the alternating-difference value of H restricted to S_i on the
// chosen nodes (each exactly D+2 of them).  Computed purely from 1-D tables;
// if nonzero, the compiled system is infeasible.
Scalar nabla_witness(const RetractionProblem& p,
                     const std::vector<std::vector<Scalar>>& nodes);

enum class HSource { RandomRational, Symbolic };

struct SweepRow {
    size_t axes = 0;
    size_t size = 0;  // common sample-set size
    unsigned degree_bound = 0;
    bool feasible = false;
    bool witness_available = false;  // size >= D+2
    bool witness_nonzero = false;
    std::string witness;  // value string when available
    std::optional<MonoBox> degree_box;  // monochromatic box of the degree coloring
    bool degree_box_verified = false;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    // No row may combine a nonzero witness with a feasible system.
    bool witness_contract_holds = true;
};

// Cross-tabulated solver and witness verdicts over axes in [1, axes_max],
// common grid sizes in [2, size_max], degree bounds in [0, d_max].  Sample
// nodes are 0..size-1; H values are seeded random rationals or symbols from
// a shared tower registry.  On feasible rows the per-point maximal f degree
// is colored and a monochromatic box of side 2 searched for and verified.
// Caps: axes_max <= 3, size_max <= 6, d_max <= 4.
SweepReport sweep(size_t axes_max, size_t size_max, unsigned d_max, HSource source,
                  std::uint64_t seed);

}  // namespace nablakit

#endif
