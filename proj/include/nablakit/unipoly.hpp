// Dense univariate polynomials over a Scalar field; the Euclidean workhorse
// behind Smith normal form over k[x], Bezout certificates, and interpolation.
#ifndef NABLAKIT_UNIPOLY_HPP
#define NABLAKIT_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "nablakit/multipoly.hpp"
#include "nablakit/scalar.hpp"

namespace nablakit {

class UniPoly {
public:
    explicit UniPoly(FieldPtr field);  // zero
    UniPoly(FieldPtr field, std::vector<Scalar> coeffs);  // coeffs[i] * x^i

    static UniPoly constant(const Scalar& c);
    static UniPoly x(const FieldPtr& f);                       // the variable
    static UniPoly x_minus(const Scalar& s);                   // x - s
    static UniPoly from_multipoly(const MultiPoly& p);         // must be <= 1 variable

    const FieldPtr& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    Scalar leading() const;
    Scalar coeff(size_t i) const;

    UniPoly neg() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Scalar& s) const;
    UniPoly monic() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Scalar eval(const Scalar& at) const;

    // Exact division with remainder; b nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic
    // g = gcd(a,b) monic with u*a + v*b = g.
    static UniPoly ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& u, UniPoly& v);

    MultiPoly to_multipoly(const std::string& var = "x") const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();

    FieldPtr field_;
    std::vector<Scalar> c_;
};

inline UniPoly operator+(const UniPoly& a, const Scalar& s) { return a + UniPoly::constant(s); }
inline UniPoly operator-(const UniPoly& a, const Scalar& s) { return a - UniPoly::constant(s); }
inline UniPoly operator*(const UniPoly& a, const Scalar& s) { return a.scaled(s); }

inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    UniPoly q(a.field()), r(a.field());
    UniPoly::divmod(a, b, q, r);
    return {std::move(q), std::move(r)};
}

inline UniPoly gcd(const UniPoly& a, const UniPoly& b) { return UniPoly::gcd(a, b); }

struct ExtGcd {
    UniPoly g, u, v;  // g monic, u*a + v*b = g
};

inline ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly u(a.field()), v(a.field());
    UniPoly g = UniPoly::ext_gcd(a, b, u, v);
    return {std::move(g), std::move(u), std::move(v)};
}

}  // namespace nablakit

#endif
