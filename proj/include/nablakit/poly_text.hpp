// Text round-trip for polynomials and scalars.
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := base ('^' uint)?
//   base    := number ['mod' uint] | variable | '(' expr ')'
//   variable:= [A-Za-z_][A-Za-z0-9_]* ('[' balanced ']')*
//
// Variable names may carry bracketed suffixes (X[2], X[X[2]], X[1/2]) so the
// tower's generators survive a round trip.  Output of MultiPoly::str() and
// Scalar::str() parses back under this grammar.
#ifndef NABLAKIT_POLY_TEXT_HPP
#define NABLAKIT_POLY_TEXT_HPP

#include <string>

#include "nablakit/multipoly.hpp"

namespace nablakit {

struct ParsedRat {
    MultiPoly num;
    MultiPoly den;
};

// Parses an expression over `coeff_field` with all variables flat (one level).
ParsedRat parse_ratexpr(const std::string& text, const FieldPtr& coeff_field);

// Expression must reduce to a polynomial (denominator constant).
MultiPoly parse_poly(const std::string& text, const FieldPtr& coeff_field);

// Parses a scalar of the given field.  For function fields of depth 1 the
// variables become generators; deeper towers re-stratify via tower.hpp.
Scalar parse_scalar(const std::string& text, const FieldPtr& field);

}  // namespace nablakit

#endif
