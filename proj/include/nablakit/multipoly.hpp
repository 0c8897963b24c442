// Sparse multivariate polynomials over a Scalar field.
//
// Variables are named; the variable list of a polynomial is kept sorted by
// name and exponent vectors are aligned to it.  Binary operations take the
// union of the two variable lists, so polynomials over the same field always
// combine.  Terms are ordered graded-lexicographically (total degree first,
// then lex on exponents under the sorted variable order); this order fixes
// the canonical text form and the leading coefficient used to normalize
// rational functions.
#ifndef NABLAKIT_MULTIPOLY_HPP
#define NABLAKIT_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nablakit/scalar.hpp"

namespace nablakit {

using Exponents = std::vector<std::uint32_t>;

// Graded lex, descending: higher total degree first, then lexicographically
// larger exponent vector first.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, Scalar, GradedLexDesc>;

    explicit MultiPoly(FieldPtr coeff_field);  // zero polynomial, no variables

    static MultiPoly zero(const FieldPtr& f) { return MultiPoly(f); }
    static MultiPoly constant(const Scalar& c);
    static MultiPoly variable(const FieldPtr& f, const std::string& name);
    static MultiPoly from_terms(FieldPtr f, std::vector<std::string> vars, TermMap terms);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant-term value; requires is_constant().
    Scalar constant_value() const;

    // -1 encodes the zero polynomial's degree of minus infinity.
    long total_degree() const;
    long degree_in(const std::string& var) const;

    Scalar leading_coefficient() const;  // under graded lex; zero poly -> 0
    Scalar coefficient(const Exponents& e_aligned) const;

    MultiPoly neg() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const { return neg(); }
    MultiPoly& operator+=(const MultiPoly& b) { *this = *this + b; return *this; }
    MultiPoly& operator-=(const MultiPoly& b) { *this = *this - b; return *this; }
    MultiPoly& operator*=(const MultiPoly& b) { *this = *this * b; return *this; }

    MultiPoly scaled(const Scalar& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Full evaluation; point aligned with vars(), throws on arity mismatch.
    Scalar eval(const std::vector<Scalar>& point) const;
    // Full evaluation by name; every variable must be bound.
    Scalar eval_named(const std::map<std::string, Scalar>& bindings) const;
    // Replaces a subset of variables by scalars; unbound variables remain.
    MultiPoly substitute(const std::map<std::string, Scalar>& bindings) const;
    // Replaces variables by polynomials (ring homomorphism).
    MultiPoly substitute_polys(const std::map<std::string, MultiPoly>& bindings) const;
    MultiPoly rename_var(const std::string& from, const std::string& to) const;

    // Exact division; throws std::domain_error when g does not divide.
    static MultiPoly divexact(const MultiPoly& f, const MultiPoly& g);
    // Monic (leading coefficient 1) gcd, deterministic; gcd(0,0) = 0.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // Decompose as a univariate polynomial in `var` with coefficients free of
    // `var`; index = power.  Recompose with from_var_coeffs.
    std::vector<MultiPoly> var_coefficients(const std::string& var) const;
    static MultiPoly from_var_coeffs(const FieldPtr& f, const std::string& var,
                                     const std::vector<MultiPoly>& coeffs);

    std::string str() const;

private:
    void insert_term(const Exponents& e, const Scalar& c);  // accumulates, drops zero

    FieldPtr field_;
    std::vector<std::string> vars_;
    TermMap terms_;

    friend std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b);
};

inline MultiPoly divexact(const MultiPoly& f, const MultiPoly& g) {
    return MultiPoly::divexact(f, g);
}
inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::gcd(a, b); }

struct RatFunc {
    MultiPoly num;
    MultiPoly den;
};

// Canonicalizes num/den (gcd removed, monic denominator) and wraps them as a
// Scalar of the function field over num's coefficient field.
Scalar make_ratfunc(MultiPoly num, MultiPoly den);
Scalar make_ratfunc(MultiPoly num);

}  // namespace nablakit

#endif
