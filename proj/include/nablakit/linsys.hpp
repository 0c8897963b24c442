// Exact sparse linear solving over any Scalar field, with certificates on
// both outcomes: a satisfying assignment when the system is consistent, and
// a left-null combination of the input equations (annihilating every
// coefficient column but not the right-hand side) when it is not.  Either
// certificate can be re-verified by plain substitution, independent of the
// elimination that produced it.
#ifndef NABLAKIT_LINSYS_HPP
#define NABLAKIT_LINSYS_HPP

#include <map>
#include <vector>

#include "nablakit/scalar.hpp"

namespace nablakit {

// One equation: sum over (unknown index -> coefficient) equals rhs.
struct LinEq {
    std::map<size_t, Scalar> coeffs;
    Scalar rhs;
};

struct LinearSolution {
    bool feasible = false;
    // feasible: one value per unknown (free unknowns set to zero).
    std::vector<Scalar> assignment;
    // infeasible: row index -> multiplier, a combination of the input
    // equations with zero left side and nonzero right side.
    std::map<size_t, Scalar> combination;
};

// Row echelon elimination with bookkeeping rows.  Pivots prefer low-
// complexity coefficients (ground-field constants over bulky rational
// functions), which keeps symbolic systems from blowing up.
LinearSolution solve_sparse(size_t unknowns, const std::vector<LinEq>& eqs,
                            const FieldPtr& ground);

// Substitutes the assignment into every equation.
bool verify_assignment(const std::vector<LinEq>& eqs, const std::vector<Scalar>& assignment);

// Checks the combination kills every coefficient column but not the rhs.
bool verify_null_combination(const std::vector<LinEq>& eqs,
                             const std::map<size_t, Scalar>& combination);

}  // namespace nablakit

#endif
