// Scalar: an element of an exact field (see field.hpp).  Representations are
// canonical, so mathematically equal scalars of the same field compare equal
// bit for bit:
//   - rationals are stored reduced with positive denominator (cpp_rational),
//   - prime field elements as the least nonnegative residue,
//   - rational functions as reduced num/den polynomial pairs with monic
//     denominator under graded lex (see multipoly.hpp).
//
// Text grammar (round-trips through str()/parse_scalar):
//   rational:  "5", "-3/4"
//   prime:     "3 mod 5"   (plain integers also accepted when the field is known)
//   function:  "X[2] - X[0]", "(x^2 - 1)/(x + 1)"
#ifndef NABLAKIT_SCALAR_HPP
#define NABLAKIT_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "nablakit/field.hpp"
#include "nablakit/numbers.hpp"

namespace nablakit {

class MultiPoly;
struct RatFunc;  // { MultiPoly num, den; }, defined in multipoly.hpp

class Scalar {
public:
    Scalar();  // zero in Q

    static Scalar rational(BigRat v);
    static Scalar rational(BigInt num, BigInt den);
    static Scalar residue(const FieldPtr& prime_field, BigInt r);
    // Takes ownership of an already-reduced num/den pair; callers normally go
    // through make_ratfunc() in multipoly.hpp which canonicalizes first.
    static Scalar function_raw(FieldPtr fn_field, std::shared_ptr<const RatFunc> v);

    static Scalar zero(const FieldPtr& f);
    static Scalar one(const FieldPtr& f);
    static Scalar from_int(const FieldPtr& f, long long v);
    static Scalar from_rat(const FieldPtr& f, const BigRat& v);

    const FieldPtr& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar neg() const;
    Scalar inv() const;  // throws on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const { return neg(); }
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

    // Equality across embeddable fields lifts both sides to the join first.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical image in an extension field; identity when target == field().
    Scalar embedded(const FieldPtr& target) const;

    // Accessors per kind; throw std::logic_error on kind mismatch.
    const BigRat& rat() const;
    std::uint64_t res() const;
    const RatFunc& fn() const;

    std::string str() const;

    // Pivot-selection heuristic for the exact solver: 0 for ground-field
    // values, larger for bulkier rational functions.
    int complexity() const;

private:
    FieldPtr field_;
    std::variant<BigRat, std::uint64_t, std::shared_ptr<const RatFunc>> v_;
};

// Modular helpers shared with unipoly/prime-field code.
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace nablakit

#endif
