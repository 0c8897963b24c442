// Weighted alternating difference operators on function tables.
//
// Applying the operator along an axis with node list z contracts that axis
// away:  result(s) = sum_{j=1..|z|} (-1)^j * W(z without j) * f(s with axis
// value z_j), where W is the difference product of vandermonde.hpp.  With
// d+2 distinct nodes the operator annihilates exactly the tables that are
// polynomial of degree <= d along the axis; this threshold drives the
// polynomiality decision procedure below.
#ifndef NABLAKIT_NABLA_HPP
#define NABLAKIT_NABLA_HPP

#include <optional>
#include <string>
#include <vector>

#include "nablakit/grid.hpp"
#include "nablakit/multipoly.hpp"

namespace nablakit {

// Contracts `axis` away; z must list >= 2 pairwise-distinct nodes of that
// axis.  Throws std::invalid_argument on unknown axis, off-axis or repeated
// nodes, or |z| < 2.
TabulatedFunction nabla_apply(const TabulatedFunction& f, const std::string& axis,
                              const std::vector<Scalar>& z);

// True iff applying along axis1 then axis2 equals the reverse order, as exact
// tables.  Always true for correct inputs; exposed as a checkable property.
// Throws std::invalid_argument when both labels name the same axis.
bool nabla_commute_check(const TabulatedFunction& f, const std::string& axis1,
                         const std::vector<Scalar>& z1, const std::string& axis2,
                         const std::vector<Scalar>& z2);

struct PolyDecision {
    bool is_polynomial;
    // Set when polynomial: an interpolant of degree <= d in one variable
    // named after the axis, matching f on every node.
    std::optional<MultiPoly> interpolant;
    // Set otherwise: d+2 distinct nodes on which nabla_apply(f, .) != 0.
    std::optional<std::vector<Scalar>> nonzero_nodes;
};

// Decides whether a 1-axis table agrees with a polynomial of degree <= d on
// all its nodes.  Interpolates through the first d+1 nodes and verifies the
// remainder; on mismatch the returned node list is the interpolation support
// plus the first failing node, re-checked to give a nonzero operator value.
// Throws std::invalid_argument unless the axis has >= d+2 nodes.
PolyDecision polynomiality_test(const TabulatedFunction& f, long d);

struct DegreeBound {
    bool bounded;    // false = no degree decidable within the node budget
    long degree;     // minimal d with a positive decision, when bounded
};

// Smallest d whose polynomiality_test succeeds, scanning d = 0,1,...  while
// d+2 node support is available.  Requires >= 2 nodes.
DegreeBound degree_detect(const TabulatedFunction& f);

}  // namespace nablakit

#endif
