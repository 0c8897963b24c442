#include "nablakit/nabla.hpp"

#include <stdexcept>

#include "nablakit/unipoly.hpp"
#include "nablakit/vandermonde.hpp"

namespace nablakit {

TabulatedFunction nabla_apply(const TabulatedFunction& f, const std::string& axis,
                              const std::vector<Scalar>& z) {
    const Grid& g = f.grid();
    size_t k = g.axis_index(axis);
    if (z.size() < 2) throw std::invalid_argument("need at least 2 nodes");
    std::vector<size_t> zidx;
    zidx.reserve(z.size());
    for (auto& s : z) zidx.push_back(g.node_index(k, s));
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            if (zidx[i] == zidx[j])
                throw std::invalid_argument("repeated node " + z[i].str());

    // Per-summand weights W(z without j), embedded into the table's field.
    FieldPtr fld = f.field();
    for (auto& s : z) fld = join_fields(fld, s.field());
    std::vector<Scalar> weight;
    weight.reserve(z.size());
    for (size_t j = 0; j < z.size(); ++j) {
        std::vector<Scalar> rest;
        for (size_t a = 0; a < z.size(); ++a)
            if (a != j) rest.push_back(z[a]);
        weight.push_back(vandermonde_weight(rest).embedded(fld));
    }

    Grid out = g.without_axis(axis);
    std::vector<Scalar> vals;
    vals.reserve(out.npoints());
    for (size_t flat = 0; flat < out.npoints(); ++flat) {
        auto ridx = out.unflatten(flat);
        Scalar acc = Scalar::zero(fld);
        for (size_t j = 0; j < z.size(); ++j) {
            std::vector<size_t> full = ridx;
            full.insert(full.begin() + static_cast<long>(k), zidx[j]);
            Scalar term = weight[j] * f.at(full);
            acc = (j % 2 == 0) ? acc - term : acc + term;  // 1-based (-1)^j
        }
        vals.push_back(std::move(acc));
    }
    return TabulatedFunction(std::move(out), std::move(vals));
}

bool nabla_commute_check(const TabulatedFunction& f, const std::string& axis1,
                         const std::vector<Scalar>& z1, const std::string& axis2,
                         const std::vector<Scalar>& z2) {
    if (axis1 == axis2) throw std::invalid_argument("commutation needs two distinct axes");
    TabulatedFunction ab = nabla_apply(nabla_apply(f, axis1, z1), axis2, z2);
    TabulatedFunction ba = nabla_apply(nabla_apply(f, axis2, z2), axis1, z1);
    return ab == ba;
}

PolyDecision polynomiality_test(const TabulatedFunction& f, long d) {
    if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (f.grid().dim() != 1)
        throw std::invalid_argument("polynomiality test needs a 1-axis table");
    const Axis& ax = f.grid().axes().front();
    long n = static_cast<long>(ax.nodes.size());
    if (n < d + 2)
        throw std::invalid_argument("need at least d+2 nodes to decide at bound d");

    FieldPtr fld = f.field();
    // Lagrange interpolant through the first d+1 nodes.
    UniPoly p(fld);
    for (long i = 0; i <= d; ++i) {
        UniPoly basis = UniPoly::constant(Scalar::one(fld));
        Scalar denom = Scalar::one(fld);
        for (long j = 0; j <= d; ++j) {
            if (j == i) continue;
            basis = basis * UniPoly::x_minus(ax.nodes[static_cast<size_t>(j)].embedded(fld));
            denom = denom * (ax.nodes[static_cast<size_t>(i)] - ax.nodes[static_cast<size_t>(j)])
                                .embedded(fld);
        }
        p = p + basis.scaled(f.values()[static_cast<size_t>(i)] / denom);
    }

    for (long m = d + 1; m < n; ++m) {
        if (p.eval(ax.nodes[static_cast<size_t>(m)].embedded(fld)) ==
            f.values()[static_cast<size_t>(m)])
            continue;
        // Interpolation support plus the failing node: d+2 nodes with a
        // provably nonzero operator value.
        std::vector<Scalar> nodes(ax.nodes.begin(), ax.nodes.begin() + d + 1);
        nodes.push_back(ax.nodes[static_cast<size_t>(m)]);
        Scalar check = nabla_apply(f, ax.label, nodes).scalar_value();
        if (check.is_zero()) throw std::logic_error("witness annihilated unexpectedly");
        return PolyDecision{false, std::nullopt, std::move(nodes)};
    }
    return PolyDecision{true, p.to_multipoly(ax.label), std::nullopt};
}

DegreeBound degree_detect(const TabulatedFunction& f) {
    if (f.grid().dim() != 1)
        throw std::invalid_argument("degree detection needs a 1-axis table");
    long n = static_cast<long>(f.grid().axes().front().nodes.size());
    if (n < 2) throw std::invalid_argument("need at least 2 nodes");
    for (long d = 0; d + 2 <= n; ++d) {
        if (polynomiality_test(f, d).is_polynomial) return DegreeBound{true, d};
    }
    return DegreeBound{false, -1};
}

}  // namespace nablakit
