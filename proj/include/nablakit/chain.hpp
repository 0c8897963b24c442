// Bounded chain complexes of free modules, their tensor product with Koszul
// signs, and homology over Euclidean ring objects.
//
// A complex stores ranks r_0..r_N and differentials d_k : C_k -> C_{k-1}
// for k = 1..N.  Shapes are enforced on construction; the composite-zero
// law is a separate check (is_complex) so constructions can be validated
// rather than trusted.
#ifndef NABLAKIT_CHAIN_HPP
#define NABLAKIT_CHAIN_HPP

#include <stdexcept>
#include <vector>

#include "nablakit/snf.hpp"

namespace nablakit {

template <class R>
class ChainComplex {
public:
    ChainComplex(R ring, std::vector<size_t> ranks, std::vector<Matrix<R>> diffs)
        : ring_(std::move(ring)), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
        if (ranks_.empty()) throw std::invalid_argument("complex needs at least one level");
        if (diffs_.size() + 1 != ranks_.size())
            throw std::invalid_argument("differential count mismatch");
        for (size_t k = 1; k < ranks_.size(); ++k)
            if (diffs_[k - 1].rows() != ranks_[k - 1] || diffs_[k - 1].cols() != ranks_[k])
                throw std::invalid_argument("differential shape mismatch");
    }

    const R& ring() const { return ring_; }
    size_t levels() const { return ranks_.size(); }
    size_t rank(size_t k) const { return ranks_.at(k); }
    const Matrix<R>& d(size_t k) const { return diffs_.at(k - 1); }  // k in [1, levels)

    bool is_complex() const {
        for (size_t k = 2; k < ranks_.size(); ++k)
            if (!(d(k - 1) * d(k)).is_zero()) return false;
        return true;
    }

private:
    R ring_;
    std::vector<size_t> ranks_;
    std::vector<Matrix<R>> diffs_;
};

// Total complex of the double complex A_p tensor B_q, blocks ordered by
// ascending p, B-coordinate fastest within a block (kron convention).
// Signs: d(a ox b) = d(a) ox b + (-1)^p a ox d(b).
template <class R>
ChainComplex<R> tensor_complexes(const ChainComplex<R>& a, const ChainComplex<R>& b) {
    const R& ring = a.ring();
    size_t na = a.levels(), nb = b.levels();
    size_t levels = na + nb - 1;

    // block_off[n][p - p_min(n)] = column offset of block (p, n-p) in C_n.
    auto p_min = [&](size_t n) { return n >= nb ? n - (nb - 1) : 0; };
    auto p_max = [&](size_t n) { return std::min(n, na - 1); };
    std::vector<size_t> ranks(levels, 0);
    std::vector<std::vector<size_t>> block_off(levels);
    for (size_t n = 0; n < levels; ++n) {
        for (size_t p = p_min(n); p <= p_max(n); ++p) {
            block_off[n].push_back(ranks[n]);
            ranks[n] += a.rank(p) * b.rank(n - p);
        }
    }

    std::vector<Matrix<R>> diffs;
    for (size_t n = 1; n < levels; ++n) {
        Matrix<R> dn(ring, ranks[n - 1], ranks[n]);
        auto place = [&](size_t row0, size_t col0, const Matrix<R>& blk) {
            for (size_t i = 0; i < blk.rows(); ++i)
                for (size_t j = 0; j < blk.cols(); ++j) dn.at(row0 + i, col0 + j) = blk.at(i, j);
        };
        for (size_t p = p_min(n); p <= p_max(n); ++p) {
            size_t q = n - p;
            size_t col0 = block_off[n][p - p_min(n)];
            if (p >= 1) {
                size_t row0 = block_off[n - 1][(p - 1) - p_min(n - 1)];
                place(row0, col0, kron(a.d(p), Matrix<R>::identity(ring, b.rank(q))));
            }
            if (q >= 1) {
                size_t row0 = block_off[n - 1][p - p_min(n - 1)];
                Matrix<R> blk = kron(Matrix<R>::identity(ring, a.rank(p)), b.d(q));
                if (p % 2 == 1) blk = blk.scaled(ring.neg(ring.one()));
                place(row0, col0, blk);
            }
        }
        diffs.push_back(std::move(dn));
    }
    return ChainComplex<R>(ring, std::move(ranks), std::move(diffs));
}

// H_k = ker d_k / im d_{k+1}, reported as a ModuleShape.
template <class R>
ModuleShape<R> homology(const ChainComplex<R>& c, size_t k) {
    const R& ring = c.ring();
    if (k >= c.levels()) throw std::invalid_argument("homology degree out of range");
    // Kernel coordinates: columns of K are a basis of ker d_k (all of C_k
    // when k = 0), so im d_{k+1} rewrites as K x = column.
    Matrix<R> K = k == 0 ? Matrix<R>::identity(ring, c.rank(0)) : kernel_basis(c.d(k));
    size_t s = K.cols();
    size_t img_cols = k + 1 < c.levels() ? c.rank(k + 1) : 0;
    Matrix<R> X(ring, s, img_cols);
    for (size_t j = 0; j < img_cols; ++j) {
        auto sol = solve_linear(K, c.d(k + 1).col(j));
        if (!sol) throw std::logic_error("boundary not contained in cycles");
        for (size_t i = 0; i < s; ++i) X.at(i, j) = (*sol)[i];
    }
    auto snf = smith_normal_form(X);
    ModuleShape<R> h;
    for (auto& f : snf.invariants())
        if (!ring.is_unit(f)) h.torsion.push_back(f);
    h.free_rank = s - snf.rank();
    return h;
}

}  // namespace nablakit

#endif
