#include "nablakit/vandermonde.hpp"

#include <stdexcept>

namespace nablakit {

Scalar vandermonde_weight(const std::vector<Scalar>& z) {
    if (z.empty()) return Scalar::rational(BigRat(1));
    FieldPtr f = z.front().field();
    for (auto& c : z) f = join_fields(f, c.field());
    Scalar acc = Scalar::one(f);
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            acc = acc * (z[j] - z[i]);
    return acc;
}

MultiPoly vandermonde_poly(const FieldPtr& f, size_t n, const std::string& var_prefix) {
    MultiPoly acc = MultiPoly::constant(Scalar::one(f));
    std::vector<MultiPoly> xs;
    for (size_t i = 1; i <= n; ++i)
        xs.push_back(MultiPoly::variable(f, var_prefix + std::to_string(i)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            acc = acc * (xs[j] - xs[i]);
    return acc;
}

Scalar lagrange_identity(const UniPoly& f, const std::vector<Scalar>& z) {
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            if (z[i] == z[j])
                throw std::invalid_argument("repeated interpolation node: " + z[i].str());
    FieldPtr k = f.field();
    for (auto& c : z) k = join_fields(k, c.field());
    Scalar acc = Scalar::zero(k);
    Scalar sign = Scalar::one(k).neg();  // (-1)^1 for the first summand
    for (size_t i = 0; i < z.size(); ++i) {
        std::vector<Scalar> rest;
        rest.reserve(z.size() - 1);
        for (size_t j = 0; j < z.size(); ++j)
            if (j != i) rest.push_back(z[j]);
        acc = acc + sign * vandermonde_weight(rest) * f.eval(z[i]);
        sign = sign.neg();
    }
    return acc;
}

}  // namespace nablakit
