// Ring objects for the module-theory templates: arbitrary-precision integers
// and univariate polynomials over a Scalar field.  Both are Euclidean, with
// exact division, unit normalization (positive leading sign / monic), and a
// size measure used for pivot selection.
//
// Ring objects are small values passed into Matrix and friends; IntRing is
// stateless, PolyRing carries its coefficient field.
#ifndef NABLAKIT_RINGS_HPP
#define NABLAKIT_RINGS_HPP

#include <stdexcept>
#include <string>

#include "nablakit/multipoly.hpp"
#include "nablakit/numbers.hpp"
#include "nablakit/unipoly.hpp"

namespace nablakit {

struct IntRing {
    using Elem = BigInt;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }

    // Truncated division; |r| < |b|.
    void divmod(const Elem& a, const Elem& b, Elem& q, Elem& r) const {
        if (b == 0) throw std::domain_error("division by zero");
        q = a / b;
        r = a - q * b;
    }
    bool divides(const Elem& b, const Elem& a) const {
        if (b == 0) return a == 0;
        return a % b == 0;
    }
    Elem divexact(const Elem& a, const Elem& b) const {
        if (!divides(b, a)) throw std::domain_error("inexact integer division");
        return a / b;
    }

    // Positive representative; *unit receives the factor u with a = u * out.
    Elem unit_normalize(const Elem& a, Elem* unit = nullptr) const {
        if (a < 0) {
            if (unit) *unit = Elem(-1);
            return -a;
        }
        if (unit) *unit = Elem(1);
        return a;
    }

    // Pivot heuristic: prefer small magnitude.
    size_t esize(const Elem& a) const {
        Elem v = a < 0 ? Elem(-a) : a;
        size_t bits = 0;
        while (v > 0) {
            v >>= 1;
            ++bits;
        }
        return bits;
    }

    std::string str(const Elem& a) const { return a.str(); }
};

class PolyRing {
public:
    using Elem = UniPoly;

    explicit PolyRing(FieldPtr k) : k_(std::move(k)) {}
    const FieldPtr& coeff_field() const { return k_; }

    Elem zero() const { return UniPoly(k_); }
    Elem one() const { return UniPoly::constant(Scalar::one(k_)); }
    Elem from_int(long long v) const { return UniPoly::constant(Scalar::from_int(k_, v)); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return a.neg(); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a.degree() == 0; }

    void divmod(const Elem& a, const Elem& b, Elem& q, Elem& r) const {
        UniPoly::divmod(a, b, q, r);
    }
    bool divides(const Elem& b, const Elem& a) const {
        if (b.is_zero()) return a.is_zero();
        Elem q(k_), r(k_);
        UniPoly::divmod(a, b, q, r);
        return r.is_zero();
    }
    Elem divexact(const Elem& a, const Elem& b) const {
        Elem q(k_), r(k_);
        UniPoly::divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    // Monic representative.
    Elem unit_normalize(const Elem& a, Elem* unit = nullptr) const {
        if (a.is_zero()) {
            if (unit) *unit = one();
            return a;
        }
        if (unit) *unit = UniPoly::constant(a.leading());
        return a.monic();
    }

    size_t esize(const Elem& a) const { return static_cast<size_t>(a.degree() + 1); }

    std::string str(const Elem& a) const { return a.str(); }

private:
    FieldPtr k_;
};

// A field as a degenerate Euclidean ring: every nonzero element is a unit
// and division is exact.  Useful when the matrix machinery should behave
// like plain linear algebra.
class FieldRing {
public:
    using Elem = Scalar;

    explicit FieldRing(FieldPtr k) : k_(std::move(k)) {}
    const FieldPtr& coeff_field() const { return k_; }

    Elem zero() const { return Scalar::zero(k_); }
    Elem one() const { return Scalar::one(k_); }
    Elem from_int(long long v) const { return Scalar::from_int(k_, v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return a.neg(); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return !a.is_zero(); }

    void divmod(const Elem& a, const Elem& b, Elem& q, Elem& r) const {
        q = a / b;
        r = zero();
    }
    bool divides(const Elem& b, const Elem& a) const {
        return b.is_zero() ? a.is_zero() : true;
    }
    Elem divexact(const Elem& a, const Elem& b) const { return a / b; }

    Elem unit_normalize(const Elem& a, Elem* unit = nullptr) const {
        if (a.is_zero()) {
            if (unit) *unit = one();
            return a;
        }
        if (unit) *unit = a;
        return one();
    }

    size_t esize(const Elem& a) const { return static_cast<size_t>(a.complexity()) + 1; }

    std::string str(const Elem& a) const { return a.str(); }

private:
    FieldPtr k_;
};

// Multivariate polynomials: a plain commutative ring object, not Euclidean.
// Anything needing divmod (Smith form, exact solving) will not compile over
// this ring, which is the point; bounded-degree searches go through the
// sparse solver instead.
class MPolyRing {
public:
    using Elem = MultiPoly;

    explicit MPolyRing(FieldPtr k) : k_(std::move(k)) {}
    const FieldPtr& coeff_field() const { return k_; }

    Elem zero() const { return MultiPoly::zero(k_); }
    Elem one() const { return MultiPoly::constant(Scalar::one(k_)); }
    Elem from_int(long long v) const { return MultiPoly::constant(Scalar::from_int(k_, v)); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return a.neg(); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a.is_constant() && !a.is_zero(); }

    Elem divexact(const Elem& a, const Elem& b) const { return MultiPoly::divexact(a, b); }

    size_t esize(const Elem& a) const {
        return a.terms().size() + static_cast<size_t>(a.total_degree() + 1);
    }

    std::string str(const Elem& a) const { return a.str(); }

private:
    FieldPtr k_;
};

}  // namespace nablakit

#endif
