// The universal alternating weight P = prod_{i<j} (x_j - x_i) and the
// weighted interpolation identity built on it.
//
// Node-count convention used throughout this project: an alternating sum over
// d+2 pairwise-distinct nodes annihilates exactly the polynomials of degree
// <= d.  For monic f of degree |z|-1 the sum evaluates to (-1)^{|z|} times
// the weight of z; the sign is fixed by the 1-based (-1)^i in the sum and is
// pinned by tests.
#ifndef NABLAKIT_VANDERMONDE_HPP
#define NABLAKIT_VANDERMONDE_HPP

#include <vector>

#include "nablakit/multipoly.hpp"
#include "nablakit/scalar.hpp"
#include "nablakit/unipoly.hpp"

namespace nablakit {

// prod_{i<j}(z_j - z_i); empty product (n <= 1) is 1.
Scalar vandermonde_weight(const std::vector<Scalar>& z);

// The same product as a polynomial in x1..xn over `f`.
MultiPoly vandermonde_poly(const FieldPtr& f, size_t n, const std::string& var_prefix = "x");

// sum_{i=1..|z|} (-1)^i * weight(z with i-th entry removed) * f(z_i).
// Throws std::invalid_argument on repeated nodes.
Scalar lagrange_identity(const UniPoly& f, const std::vector<Scalar>& z);

}  // namespace nablakit

#endif
