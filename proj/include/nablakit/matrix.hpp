// Dense matrices over a ring object (rings.hpp), with the fraction-free
// determinant used for unimodularity certificates.
#ifndef NABLAKIT_MATRIX_HPP
#define NABLAKIT_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nablakit/rings.hpp"

namespace nablakit {

template <class R>
class Matrix {
public:
    using Elem = typename R::Elem;

    Matrix(R ring, size_t rows, size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, ring_.zero()) {}

    static Matrix identity(R ring, size_t n) {
        Matrix m(ring, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = m.ring_.one();
        return m;
    }

    const R& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Elem& at(size_t i, size_t j) { return a_.at(i * cols_ + j); }
    const Elem& at(size_t i, size_t j) const { return a_.at(i * cols_ + j); }

    bool is_zero() const {
        for (auto& e : a_)
            if (!ring_.is_zero(e)) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix out(a.ring_, a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a.ring_.is_zero(a.at(i, k))) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    out.at(i, j) =
                        a.ring_.add(out.at(i, j), a.ring_.mul(a.at(i, k), b.at(k, j)));
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
        Matrix out(a.ring_, a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.ring_.add(a.a_[i], b.a_[i]);
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix dimension mismatch");
        Matrix out(a.ring_, a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.ring_.sub(a.a_[i], b.a_[i]);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (!a.ring_.eq(a.a_[i], b.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix out(ring_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Matrix scaled(const Elem& c) const {
        Matrix out(ring_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_.mul(a_[i], c);
        return out;
    }

    // Kronecker product: (A kron B)((i1,i2),(j1,j2)) = A(i1,j1) * B(i2,j2),
    // second index fastest.
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix out(a.ring_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (size_t i1 = 0; i1 < a.rows_; ++i1)
            for (size_t j1 = 0; j1 < a.cols_; ++j1) {
                if (a.ring_.is_zero(a.at(i1, j1))) continue;
                for (size_t i2 = 0; i2 < b.rows_; ++i2)
                    for (size_t j2 = 0; j2 < b.cols_; ++j2)
                        out.at(i1 * b.rows_ + i2, j1 * b.cols_ + j2) =
                            a.ring_.mul(a.at(i1, j1), b.at(i2, j2));
            }
        return out;
    }

    // Fraction-free (Bareiss) determinant; square matrices only.
    Elem determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        size_t n = rows_;
        if (n == 0) return ring_.one();
        Matrix w = *this;
        bool negate = false;
        Elem prev = ring_.one();
        for (size_t k = 0; k + 1 < n; ++k) {
            size_t piv = k;
            while (piv < n && ring_.is_zero(w.at(piv, k))) ++piv;
            if (piv == n) return ring_.zero();
            if (piv != k) {
                for (size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(k, j));
                negate = !negate;
            }
            for (size_t i = k + 1; i < n; ++i)
                for (size_t j = k + 1; j < n; ++j)
                    w.at(i, j) = ring_.divexact(
                        ring_.sub(ring_.mul(w.at(i, j), w.at(k, k)),
                                  ring_.mul(w.at(i, k), w.at(k, j))),
                        prev);
            prev = w.at(k, k);
        }
        Elem det = w.at(n - 1, n - 1);
        return negate ? ring_.neg(det) : det;
    }

    std::string str() const {
        std::string out;
        for (size_t i = 0; i < rows_; ++i) {
            out += "[";
            for (size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                out += ring_.str(at(i, j));
            }
            out += "]\n";
        }
        return out;
    }

    friend Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hcat row mismatch");
        Matrix out(a.ring_, a.rows_, a.cols_ + b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
            for (size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
        }
        return out;
    }

    std::vector<Elem> col(size_t j) const {
        std::vector<Elem> out;
        out.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
        return out;
    }

private:
    R ring_;
    size_t rows_, cols_;
    std::vector<Elem> a_;
};

}  // namespace nablakit

#endif
