#include "nablakit/poly_text.hpp"

#include <cctype>
#include <stdexcept>

namespace nablakit {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    FieldPtr field;  // coefficient field

    explicit Parser(const std::string& text, FieldPtr f) : s(text), field(std::move(f)) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + " in \"" +
                                    s + "\": " + msg);
    }

    bool at_ident_start() {
        skip_ws();
        return pos < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name = s.substr(start, pos - start);
        // Bracketed suffixes belong to the name: X[2], X[X[2]].
        while (pos < s.size() && s[pos] == '[') {
            int depth = 0;
            size_t bstart = pos;
            do {
                if (pos >= s.size()) fail("unbalanced '[' in variable name");
                if (s[pos] == '[') ++depth;
                if (s[pos] == ']') --depth;
                ++pos;
            } while (depth > 0);
            name += s.substr(bstart, pos - bstart);
        }
        return name;
    }

    BigInt uinteger() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return BigInt(s.substr(start, pos - start));
    }

    ParsedRat make_const(const Scalar& c) {
        return {MultiPoly::constant(c.embedded(field)),
                MultiPoly::constant(Scalar::one(field))};
    }

    ParsedRat parse_expr() {
        bool neg = accept('-');
        ParsedRat acc = parse_term();
        if (neg) acc.num = acc.num.neg();
        while (true) {
            skip_ws();
            if (accept('+')) {
                ParsedRat t = parse_term();
                acc = add(acc, t, false);
            } else if (accept('-')) {
                ParsedRat t = parse_term();
                acc = add(acc, t, true);
            } else {
                break;
            }
        }
        return acc;
    }

    ParsedRat parse_term() {
        ParsedRat acc = parse_factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                ParsedRat t = parse_factor();
                acc = ParsedRat{acc.num * t.num, acc.den * t.den};
            } else if (accept('/')) {
                ParsedRat t = parse_factor();
                if (t.num.is_zero()) fail("division by zero");
                acc = ParsedRat{acc.num * t.den, acc.den * t.num};
            } else {
                break;
            }
        }
        return acc;
    }

    ParsedRat parse_factor() {
        ParsedRat base = parse_base();
        skip_ws();
        if (accept('^')) {
            BigInt e = uinteger();
            if (e > 64) fail("exponent too large");
            unsigned ue = e.convert_to<unsigned>();
            return {base.num.pow(ue), base.den.pow(ue)};
        }
        return base;
    }

    ParsedRat parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (accept('(')) {
            ParsedRat inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            BigInt n = uinteger();
            // `N mod p` literal.
            size_t save = pos;
            skip_ws();
            if (at_ident_start()) {
                size_t save2 = pos;
                std::string kw = ident();
                if (kw == "mod") {
                    BigInt p = uinteger();
                    if (field->kind() != Field::Kind::Prime ||
                        BigInt(field->characteristic_p()) != p)
                        fail("'mod " + p.str() + "' literal does not match the field");
                    return make_const(Scalar::residue(field, n));
                }
                pos = save2;
            }
            pos = std::max(pos, save);
            return make_const(Scalar::from_rat(field, BigRat(n)));
        }
        if (at_ident_start()) {
            std::string name = ident();
            return {MultiPoly::variable(field, name),
                    MultiPoly::constant(Scalar::one(field))};
        }
        fail("unexpected character");
    }

    static ParsedRat add(const ParsedRat& a, const ParsedRat& b, bool subtract) {
        MultiPoly n2 = subtract ? b.num.neg() : b.num;
        return {a.num * b.den + n2 * a.den, a.den * b.den};
    }
};

}  // namespace

ParsedRat parse_ratexpr(const std::string& text, const FieldPtr& coeff_field) {
    Parser p(text, coeff_field);
    ParsedRat r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

MultiPoly parse_poly(const std::string& text, const FieldPtr& coeff_field) {
    ParsedRat r = parse_ratexpr(text, coeff_field);
    if (!r.den.is_constant())
        throw std::invalid_argument("expression is not a polynomial: " + text);
    return r.num.scaled(r.den.constant_value().inv());
}

Scalar parse_scalar(const std::string& text, const FieldPtr& field) {
    switch (field->kind()) {
        case Field::Kind::Rationals:
        case Field::Kind::Prime: {
            ParsedRat r = parse_ratexpr(text, field);
            if (!r.num.is_constant() || !r.den.is_constant())
                throw std::invalid_argument("scalar expression contains variables: " + text);
            return r.num.constant_value() / r.den.constant_value();
        }
        case Field::Kind::Function: {
            ParsedRat r = parse_ratexpr(text, field->base());
            return make_ratfunc(r.num, r.den);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace nablakit
