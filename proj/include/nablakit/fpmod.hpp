// Finitely presented modules over a Euclidean ring object and maps between
// them, with decision procedures for well-definedness, injectivity,
// surjectivity, and exactness.  Everything reduces to membership and kernel
// computations on free-level matrices via the Smith machinery.
#ifndef NABLAKIT_FPMOD_HPP
#define NABLAKIT_FPMOD_HPP

#include <stdexcept>
#include <vector>

#include "nablakit/snf.hpp"

namespace nablakit {

// M = R^gens / column-span(rels).  A free module has zero relation columns.
template <class R>
struct Presentation {
    Matrix<R> rels;

    explicit Presentation(Matrix<R> r) : rels(std::move(r)) {}
    static Presentation free_module(const R& ring, size_t gens) {
        return Presentation(Matrix<R>(ring, gens, 0));
    }
    size_t gens() const { return rels.rows(); }

    // Invariant factors and free rank of the module itself.
    ModuleShape<R> structure() const { return cokernel_shape(rels); }

    bool contains(const std::vector<typename R::Elem>& v) const {
        return solve_linear(rels, v).has_value();
    }
};

// A map M -> N given by its gens x gens matrix on free covers.
template <class R>
struct FpMap {
    Matrix<R> mat;  // N.gens rows, M.gens cols
};

// The matrix must send every relation of M into the span of N's relations.
template <class R>
bool is_well_defined(const Presentation<R>& m, const FpMap<R>& f, const Presentation<R>& n) {
    if (f.mat.rows() != n.gens() || f.mat.cols() != m.gens())
        throw std::invalid_argument("map shape mismatch");
    for (size_t j = 0; j < m.rels.cols(); ++j) {
        std::vector<typename R::Elem> img = (f.mat * m.rels).col(j);
        if (!n.contains(img)) return false;
    }
    return true;
}

// Generators of { x in R^{n.gens} : f(x) lies in span(p.rels) }, the free-
// level preimage of zero.  Columns of the result; includes n's own relations
// implicitly only through the caller's membership tests.
template <class R>
Matrix<R> zero_preimage(const FpMap<R>& f, const Presentation<R>& p) {
    Matrix<R> aug = hcat(f.mat, p.rels);
    Matrix<R> ker = kernel_basis(aug);
    Matrix<R> out(f.mat.ring(), f.mat.cols(), ker.cols());
    for (size_t i = 0; i < f.mat.cols(); ++i)
        for (size_t j = 0; j < ker.cols(); ++j) out.at(i, j) = ker.at(i, j);
    return out;
}

template <class R>
bool is_injective(const Presentation<R>& m, const FpMap<R>& f, const Presentation<R>& n) {
    Matrix<R> pre = zero_preimage(f, n);
    for (size_t j = 0; j < pre.cols(); ++j)
        if (!m.contains(pre.col(j))) return false;
    return true;
}

template <class R>
bool is_surjective(const FpMap<R>& f, const Presentation<R>& m, const Presentation<R>& n) {
    Matrix<R> aug = hcat(f.mat, n.rels);
    for (size_t i = 0; i < n.gens(); ++i) {
        std::vector<typename R::Elem> e(n.gens(), f.mat.ring().zero());
        e[i] = f.mat.ring().one();
        if (!solve_linear(aug, e).has_value()) return false;
    }
    (void)m;
    return true;
}

// Exactness of M --f--> N --g--> P at N: the composite vanishes and every
// free-level kernel generator of g lifts through f modulo N's relations.
template <class R>
bool is_exact_at(const Presentation<R>& m, const FpMap<R>& f, const Presentation<R>& n,
                 const FpMap<R>& g, const Presentation<R>& p) {
    for (size_t j = 0; j < m.gens(); ++j) {
        std::vector<typename R::Elem> img = (g.mat * f.mat).col(j);
        if (!p.contains(img)) return false;  // g o f != 0
    }
    Matrix<R> pre = zero_preimage(g, p);
    Matrix<R> aug = hcat(f.mat, n.rels);
    for (size_t j = 0; j < pre.cols(); ++j)
        if (!solve_linear(aug, pre.col(j)).has_value()) return false;
    return true;
}

// 0 -> M -> N -> P -> 0 with all three checks and both well-definedness
// preconditions.
template <class R>
bool is_short_exact(const Presentation<R>& m, const FpMap<R>& f, const Presentation<R>& n,
                    const FpMap<R>& g, const Presentation<R>& p) {
    return is_well_defined(m, f, n) && is_well_defined(n, g, p) &&
           is_injective(m, f, n) && is_exact_at(m, f, n, g, p) && is_surjective(g, n, p);
}

}  // namespace nablakit

#endif
