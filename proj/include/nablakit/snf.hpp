// Smith normal form over Euclidean ring objects, with the transform
// witnesses, and the linear-algebra routines built on it: exact solving,
// kernel bases, and split retractions.
//
// smith_normal_form returns U m V = D with U, V unimodular (unit
// determinant) and the diagonal entries forming a divisibility chain
// d1 | d2 | ..., each unit-normalized.  All arithmetic is exact; callers
// verify unimodularity via Matrix::determinant.
#ifndef NABLAKIT_SNF_HPP
#define NABLAKIT_SNF_HPP

#include <optional>
#include <vector>

#include "nablakit/matrix.hpp"

namespace nablakit {

template <class R>
struct SmithForm {
    Matrix<R> U, D, V;

    size_t rank() const {
        size_t r = 0;
        size_t n = std::min(D.rows(), D.cols());
        for (size_t i = 0; i < n; ++i)
            if (!D.ring().is_zero(D.at(i, i))) ++r;
        return r;
    }
    std::vector<typename R::Elem> invariants() const {
        std::vector<typename R::Elem> out;
        size_t n = std::min(D.rows(), D.cols());
        for (size_t i = 0; i < n; ++i)
            if (!D.ring().is_zero(D.at(i, i))) out.push_back(D.at(i, i));
        return out;
    }
};

template <class R>
SmithForm<R> smith_normal_form(const Matrix<R>& m) {
    const R& ring = m.ring();
    Matrix<R> D = m;
    Matrix<R> U = Matrix<R>::identity(ring, m.rows());
    Matrix<R> V = Matrix<R>::identity(ring, m.cols());

    auto swap_rows = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        for (size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    };
    auto swap_cols = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        for (size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    };
    // row_a -= q * row_b (D and U together), col_a -= q * col_b (D and V).
    auto row_sub = [&](size_t a, size_t b, const typename R::Elem& q) {
        for (size_t j = 0; j < D.cols(); ++j)
            D.at(a, j) = ring.sub(D.at(a, j), ring.mul(q, D.at(b, j)));
        for (size_t j = 0; j < U.cols(); ++j)
            U.at(a, j) = ring.sub(U.at(a, j), ring.mul(q, U.at(b, j)));
    };
    auto col_sub = [&](size_t a, size_t b, const typename R::Elem& q) {
        for (size_t i = 0; i < D.rows(); ++i)
            D.at(i, a) = ring.sub(D.at(i, a), ring.mul(q, D.at(i, b)));
        for (size_t i = 0; i < V.rows(); ++i)
            V.at(i, a) = ring.sub(V.at(i, a), ring.mul(q, V.at(i, b)));
    };

    size_t n = std::min(D.rows(), D.cols());
    for (size_t t = 0; t < n; ++t) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        bool found = false;
        size_t pi = t, pj = t;
        for (size_t i = t; i < D.rows(); ++i)
            for (size_t j = t; j < D.cols(); ++j) {
                if (ring.is_zero(D.at(i, j))) continue;
                if (!found || ring.esize(D.at(i, j)) < ring.esize(D.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Clear below the pivot; a nonzero remainder becomes the new
            // (strictly smaller) pivot, so this terminates.
            for (size_t i = t + 1; i < D.rows(); ++i) {
                if (ring.is_zero(D.at(i, t))) continue;
                typename R::Elem q = ring.zero(), r = ring.zero();
                ring.divmod(D.at(i, t), D.at(t, t), q, r);
                row_sub(i, t, q);
                if (!ring.is_zero(D.at(i, t))) {
                    swap_rows(t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < D.cols(); ++j) {
                if (ring.is_zero(D.at(t, j))) continue;
                typename R::Elem q = ring.zero(), r = ring.zero();
                ring.divmod(D.at(t, j), D.at(t, t), q, r);
                col_sub(j, t, q);
                if (!ring.is_zero(D.at(t, j))) {
                    swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the remaining block for the chain property;
            // fold an offending row in and restart the reduction.
            for (size_t i = t + 1; i < D.rows() && !dirty; ++i)
                for (size_t j = t + 1; j < D.cols() && !dirty; ++j)
                    if (!ring.divides(D.at(t, t), D.at(i, j))) {
                        row_sub(t, i, ring.neg(ring.one()));  // row_t += row_i
                        dirty = true;
                    }
        }
        // Unit-normalize the pivot: D row t and U row t divided by the unit.
        typename R::Elem unit = ring.one();
        typename R::Elem norm = ring.unit_normalize(D.at(t, t), &unit);
        if (!ring.eq(norm, D.at(t, t))) {
            D.at(t, t) = norm;
            for (size_t j = 0; j < U.cols(); ++j) U.at(t, j) = ring.divexact(U.at(t, j), unit);
        }
    }
    return SmithForm<R>{std::move(U), std::move(D), std::move(V)};
}

// Particular solution of m x = b, if any; exactness comes from the SNF.
template <class R>
std::optional<std::vector<typename R::Elem>> solve_linear(const Matrix<R>& m,
                                                          const std::vector<typename R::Elem>& b) {
    const R& ring = m.ring();
    if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    SmithForm<R> s = smith_normal_form(m);
    // y = U b; D x' = y; x = V x'.
    std::vector<typename R::Elem> y(m.rows(), ring.zero());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.rows(); ++j)
            y[i] = ring.add(y[i], ring.mul(s.U.at(i, j), b[j]));
    std::vector<typename R::Elem> xp(m.cols(), ring.zero());
    size_t n = std::min(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i < n && !ring.is_zero(s.D.at(i, i))) {
            if (!ring.divides(s.D.at(i, i), y[i])) return std::nullopt;
            xp[i] = ring.divexact(y[i], s.D.at(i, i));
        } else if (!ring.is_zero(y[i])) {
            return std::nullopt;
        }
    }
    std::vector<typename R::Elem> x(m.cols(), ring.zero());
    for (size_t i = 0; i < m.cols(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            x[i] = ring.add(x[i], ring.mul(s.V.at(i, j), xp[j]));
    return x;
}

// Isomorphism type of a finitely generated module over R: non-unit
// invariant factors (torsion summands R/(f)) plus a free rank.
template <class R>
struct ModuleShape {
    std::vector<typename R::Elem> torsion;
    size_t free_rank = 0;

    bool is_zero() const { return torsion.empty() && free_rank == 0; }
};

// Shape of R^gens / column-span(rels).
template <class R>
ModuleShape<R> cokernel_shape(const Matrix<R>& rels) {
    auto snf = smith_normal_form(rels);
    ModuleShape<R> h;
    for (auto& f : snf.invariants())
        if (!rels.ring().is_unit(f)) h.torsion.push_back(f);
    h.free_rank = rels.rows() - snf.rank();
    return h;
}

// Columns spanning { x : m x = 0 }; saturated because V is unimodular.
template <class R>
Matrix<R> kernel_basis(const Matrix<R>& m) {
    SmithForm<R> s = smith_normal_form(m);
    size_t r = s.rank();
    Matrix<R> out(m.ring(), m.cols(), m.cols() - r);
    for (size_t j = r; j < m.cols(); ++j)
        for (size_t i = 0; i < m.cols(); ++i) out.at(i, j - r) = s.V.at(i, j);
    return out;
}

}  // namespace nablakit

#endif
