// Module-level constructions around families of ring elements: the stacked
// unit-row/diagonal map whose splitting is the central question, pairwise
// coprimality (indivisibility) verdicts with Bezout certificates, box
// quotient dimension checks, split-injectivity tests with explicit
// retractions, and truncated symmetric-power colimits.
#ifndef NABLAKIT_HOMALG_HPP
#define NABLAKIT_HOMALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nablakit/chain.hpp"
#include "nablakit/fpmod.hpp"
#include "nablakit/rings.hpp"

namespace nablakit {

// The (n+1) x n map sending the s-th basis vector to (1, 0, ..., x_s, ..., 0):
// first row all ones, then the elements on the diagonal.  n = 0 gives the
// degenerate 1 x 0 map.
Matrix<PolyRing> family_map(const PolyRing& ring, const std::vector<UniPoly>& xs);

// u * xs[i] + v * xs[j] = 1, witnessing that the pair generates the unit
// ideal.
struct BezoutPair {
    size_t i = 0, j = 0;
    UniPoly u, v;
};

struct IndivisibleVerdict {
    bool pass = false;
    std::string reason;  // set when !pass
    std::vector<BezoutPair> certificates;
};

// Pairwise unit-ideal check plus the cokernel conditions: every element has
// positive degree (so R/(x_s) is a nonzero free k-module) and, the ring
// being a domain, annihilators of nonzero elements vanish.  Throws on a zero
// element.
IndivisibleVerdict indivisible_check(const std::vector<UniPoly>& xs);

// Product ring F_2^n with pointwise operations; elements are n-bit masks.
// Models the idempotent family x_s = 1 - e_s (zero in coordinate s, one
// elsewhere), which is indivisible even though the ring is far from a
// domain.
struct BitProductRing {
    size_t n;

    explicit BitProductRing(size_t n_) : n(n_) {
        if (n_ == 0 || n_ > 16) throw std::invalid_argument("coordinate count out of range");
    }
    std::uint32_t one() const { return (1u << n) - 1; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return a & b; }
};

std::vector<std::uint32_t> idempotent_family(const BitProductRing& ring);

struct IdempotentCert {
    size_t s = 0, t = 0;
    std::uint32_t a = 0, b = 0;  // a*x_s + b*x_t = 1
};

struct IdempotentVerdict {
    bool pass = false;
    std::string reason;
    std::vector<IdempotentCert> certificates;
};

// Indivisibility of the idempotent family: explicit verified Bezout
// certificates per pair, nonzero free cokernels (computed exhaustively), and
// pairwise trivial annihilator intersections (also exhaustive).
IdempotentVerdict idempotent_indivisible_check(size_t n);

struct BoxQuotientReport {
    bool pass = false;
    size_t dimension = 0;
    std::string reason;
};

// Dimension over k of k[x_1..x_n] / (p_1(x_1), ..., p_n(x_n)) for univariate
// p_i of positive degree, each placed in its own variable.  The candidate
// monomial-box basis is certified by checking that the multiplication
// operators commute pairwise and are annihilated by their defining
// polynomials; the dimension then equals the product of the degrees.
BoxQuotientReport tensor_quotient_check(const std::vector<UniPoly>& ps);

// Univariate element placed into the named variable of the multivariate
// ring (the inclusion onto one tensor factor).
MultiPoly into_factor(const UniPoly& p, const std::string& var);

template <class R>
struct SplitVerdict {
    bool split = false;
    std::optional<Matrix<R>> retraction;  // r with r * m = identity
    std::string reason;                   // offending invariant factor otherwise
};

// Split-injectivity over a Euclidean ring: the map splits iff all invariant
// factors are units, in which case the retraction is reconstructed from the
// Smith transforms and re-verified by multiplication.  Throws if m is not
// injective (column rank defect).
template <class R>
SplitVerdict<R> has_left_inverse(const Matrix<R>& m) {
    const R& ring = m.ring();
    if (m.rows() < m.cols()) throw std::invalid_argument("map cannot be injective: too few rows");
    auto s = smith_normal_form(m);
    if (s.rank() != m.cols()) throw std::invalid_argument("map is not injective");
    SplitVerdict<R> out;
    for (size_t i = 0; i < m.cols(); ++i)
        if (!ring.is_unit(s.D.at(i, i))) {
            out.split = false;
            out.reason = "invariant factor " + ring.str(s.D.at(i, i)) + " is not a unit";
            return out;
        }
    Matrix<R> e(ring, m.cols(), m.rows());
    for (size_t i = 0; i < m.cols(); ++i)
        e.at(i, i) = ring.divexact(ring.one(), s.D.at(i, i));
    Matrix<R> r = s.V * e * s.U;
    if (!(r * m == Matrix<R>::identity(ring, m.cols())))
        throw std::logic_error("retraction failed verification");
    out.split = true;
    out.retraction = std::move(r);
    return out;
}

struct BoundedSplitVerdict {
    bool split = false;
    std::optional<Matrix<MPolyRing>> retraction;
    std::string reason;
};

// Bounded-degree split search over a multivariate polynomial ring: looks for
// a retraction whose entries have total degree <= degree_bound by compiling
// r * m = identity into an exact linear system over the coefficient field.
// A negative answer rules out retractions up to the bound, nothing more.
BoundedSplitVerdict has_left_inverse_bounded(const Matrix<MPolyRing>& m, unsigned degree_bound);

template <class R>
struct SymStage {
    size_t n = 0;
    Matrix<R> transition;       // Sym^n -> Sym^{n+1}, multiplication by eta
    Presentation<R> quotient;   // Sym^n / (eta^n)
    bool exact = false;         // 0 -> Q_n -> Q_{n+1} -> Sym^{n+1}(coker eta) -> 0
};

// Exponent vectors of length r summing to n, lexicographically descending.
std::vector<std::vector<unsigned>> sym_basis(size_t r, size_t n);

// Truncated symmetric-power colimit of the injection eta : R -> R^r given by
// a nonzero column.  Stage n carries the multiplication-by-eta transition,
// the quotient by the n-th power of eta, and the verified exactness of the
// stagewise short sequence.
template <class R>
std::vector<SymStage<R>> sym_truncation(const R& ring, const std::vector<typename R::Elem>& eta,
                                        size_t n_max) {
    size_t r = eta.size();
    if (r == 0) throw std::invalid_argument("eta has no coordinates");
    bool nonzero = false;
    for (auto& e : eta)
        if (!ring.is_zero(e)) nonzero = true;
    if (!nonzero) throw std::invalid_argument("eta is the zero map, not injective");
    if (n_max == 0) throw std::invalid_argument("n_max must be positive");

    // Bases and index maps for Sym^0 .. Sym^{n_max+1}.
    std::vector<std::vector<std::vector<unsigned>>> bases;
    std::vector<std::map<std::vector<unsigned>, size_t>> index;
    for (size_t n = 0; n <= n_max + 1; ++n) {
        bases.push_back(sym_basis(r, n));
        index.emplace_back();
        for (size_t i = 0; i < bases[n].size(); ++i) index[n].emplace(bases[n][i], i);
    }
    auto transition = [&](size_t n) {
        Matrix<R> t(ring, bases[n + 1].size(), bases[n].size());
        for (size_t c = 0; c < bases[n].size(); ++c)
            for (size_t i = 0; i < r; ++i) {
                if (ring.is_zero(eta[i])) continue;
                std::vector<unsigned> up = bases[n][c];
                ++up[i];
                size_t row = index[n + 1].at(up);
                t.at(row, c) = ring.add(t.at(row, c), eta[i]);
            }
        return t;
    };

    // eta^n as a column of Sym^n, accumulated through the transitions.
    std::vector<Matrix<R>> powers;
    Matrix<R> v(ring, 1, 1);
    v.at(0, 0) = ring.one();
    powers.push_back(v);
    std::vector<Matrix<R>> trans;
    for (size_t n = 0; n <= n_max; ++n) {
        trans.push_back(transition(n));
        powers.push_back(trans.back() * powers.back());
    }

    std::vector<SymStage<R>> out;
    for (size_t n = 1; n <= n_max; ++n) {
        Presentation<R> qn(powers[n]);
        Presentation<R> qn1(powers[n + 1]);
        FpMap<R> f{trans[n]};
        FpMap<R> g{Matrix<R>::identity(ring, bases[n + 1].size())};
        Presentation<R> third(trans[n]);  // Sym^{n+1} / eta * Sym^n
        SymStage<R> stage{n, trans[n], qn, false};
        stage.exact = is_short_exact(qn, f, qn1, g, third);
        out.push_back(std::move(stage));
    }
    return out;
}

}  // namespace nablakit

#endif
