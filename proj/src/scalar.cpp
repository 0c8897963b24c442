#include "nablakit/scalar.hpp"

#include <stdexcept>

#include "nablakit/multipoly.hpp"

namespace nablakit {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("non-invertible residue");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Scalar::Scalar() : field_(Field::rationals()), v_(BigRat(0)) {}

Scalar Scalar::rational(BigRat v) {
    Scalar s;
    s.field_ = Field::rationals();
    s.v_ = std::move(v);
    return s;
}

Scalar Scalar::rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return rational(BigRat(std::move(num), std::move(den)));
}

Scalar Scalar::residue(const FieldPtr& prime_field, BigInt r) {
    if (!prime_field || prime_field->kind() != Field::Kind::Prime)
        throw std::invalid_argument("residue() needs a prime field");
    BigInt p(prime_field->characteristic_p());
    BigInt m = r % p;
    if (m < 0) m += p;
    Scalar s;
    s.field_ = prime_field;
    s.v_ = m.convert_to<std::uint64_t>();
    return s;
}

Scalar Scalar::function_raw(FieldPtr fn_field, std::shared_ptr<const RatFunc> v) {
    if (!fn_field || fn_field->kind() != Field::Kind::Function)
        throw std::invalid_argument("function_raw() needs a function field");
    Scalar s;
    s.field_ = std::move(fn_field);
    s.v_ = std::move(v);
    return s;
}

Scalar Scalar::zero(const FieldPtr& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldPtr& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldPtr& f, long long v) {
    switch (f->kind()) {
        case Field::Kind::Rationals: return rational(BigRat(v));
        case Field::Kind::Prime: return residue(f, BigInt(v));
        case Field::Kind::Function: {
            MultiPoly num = MultiPoly::constant(from_int(f->base(), v));
            MultiPoly den = MultiPoly::constant(one(f->base()));
            return function_raw(f, std::make_shared<RatFunc>(RatFunc{std::move(num), std::move(den)}));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::from_rat(const FieldPtr& f, const BigRat& v) {
    switch (f->kind()) {
        case Field::Kind::Rationals: return rational(v);
        case Field::Kind::Prime: {
            BigInt p(f->characteristic_p());
            BigInt den = denominator(v) % p;
            if (den < 0) den += p;
            if (den == 0) throw std::domain_error("denominator vanishes mod p");
            std::uint64_t inv = mod_inv(den.convert_to<std::uint64_t>(), f->characteristic_p());
            Scalar n = residue(f, numerator(v));
            return n * residue(f, BigInt(inv));
        }
        case Field::Kind::Function: {
            Scalar base = from_rat(f->base(), v);
            MultiPoly num = MultiPoly::constant(base);
            MultiPoly den = MultiPoly::constant(one(f->base()));
            return function_raw(f, std::make_shared<RatFunc>(RatFunc{std::move(num), std::move(den)}));
        }
    }
    throw std::logic_error("unreachable");
}

const BigRat& Scalar::rat() const {
    if (field_->kind() != Field::Kind::Rationals) throw std::logic_error("not a rational scalar");
    return std::get<BigRat>(v_);
}

std::uint64_t Scalar::res() const {
    if (field_->kind() != Field::Kind::Prime) throw std::logic_error("not a prime-field scalar");
    return std::get<std::uint64_t>(v_);
}

const RatFunc& Scalar::fn() const {
    if (field_->kind() != Field::Kind::Function) throw std::logic_error("not a function-field scalar");
    return *std::get<std::shared_ptr<const RatFunc>>(v_);
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return rat() == 0;
        case Field::Kind::Prime: return res() == 0;
        case Field::Kind::Function: return fn().num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return rat() == 1;
        case Field::Kind::Prime: return res() == 1;
        case Field::Kind::Function: {
            const RatFunc& r = fn();
            return r.num.is_constant() && r.den.is_constant() &&
                   !r.num.is_zero() && r.num.constant_value() == r.den.constant_value();
        }
    }
    return false;
}

Scalar Scalar::embedded(const FieldPtr& target) const {
    if (same_field(field_, target)) return *this;
    if (target->kind() != Field::Kind::Function || !field_->embeds_into(*target))
        throw std::invalid_argument("no embedding of " + field_->name() + " into " + target->name());
    Scalar base_val = embedded(target->base());
    MultiPoly num = MultiPoly::constant(base_val);
    MultiPoly den = MultiPoly::constant(one(target->base()));
    return function_raw(target, std::make_shared<RatFunc>(RatFunc{std::move(num), std::move(den)}));
}

namespace {

std::pair<Scalar, Scalar> coerce(const Scalar& a, const Scalar& b) {
    FieldPtr f = join_fields(a.field(), b.field());
    return {a.embedded(f), b.embedded(f)};
}

}  // namespace

Scalar Scalar::neg() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: return rational(-rat());
        case Field::Kind::Prime: {
            std::uint64_t r = res();
            Scalar s;
            s.field_ = field_;
            s.v_ = r == 0 ? std::uint64_t(0) : field_->characteristic_p() - r;
            return s;
        }
        case Field::Kind::Function: {
            const RatFunc& r = fn();
            return function_raw(field_, std::make_shared<RatFunc>(RatFunc{r.num.neg(), r.den}));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    switch (field_->kind()) {
        case Field::Kind::Rationals: return rational(BigRat(1) / rat());
        case Field::Kind::Prime: {
            Scalar s;
            s.field_ = field_;
            s.v_ = mod_inv(res(), field_->characteristic_p());
            return s;
        }
        case Field::Kind::Function: {
            const RatFunc& r = fn();
            return make_ratfunc(r.den, r.num);
        }
    }
    throw std::logic_error("unreachable");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (!same_field(a.field_, b.field_)) {
        auto [x, y] = coerce(a, b);
        return x + y;
    }
    switch (a.field_->kind()) {
        case Field::Kind::Rationals: return Scalar::rational(a.rat() + b.rat());
        case Field::Kind::Prime: {
            Scalar s;
            s.field_ = a.field_;
            s.v_ = mod_add(a.res(), b.res(), a.field_->characteristic_p());
            return s;
        }
        case Field::Kind::Function: {
            const RatFunc &x = a.fn(), &y = b.fn();
            return make_ratfunc(x.num * y.den + y.num * x.den, x.den * y.den);
        }
    }
    throw std::logic_error("unreachable");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + b.neg(); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (!same_field(a.field_, b.field_)) {
        auto [x, y] = coerce(a, b);
        return x * y;
    }
    switch (a.field_->kind()) {
        case Field::Kind::Rationals: return Scalar::rational(a.rat() * b.rat());
        case Field::Kind::Prime: {
            Scalar s;
            s.field_ = a.field_;
            s.v_ = mod_mul(a.res(), b.res(), a.field_->characteristic_p());
            return s;
        }
        case Field::Kind::Function: {
            const RatFunc &x = a.fn(), &y = b.fn();
            return make_ratfunc(x.num * y.num, x.den * y.den);
        }
    }
    throw std::logic_error("unreachable");
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (!same_field(a.field_, b.field_)) {
        FieldPtr f;
        try {
            f = join_fields(a.field_, b.field_);
        } catch (const std::invalid_argument&) {
            return false;
        }
        return a.embedded(f) == b.embedded(f);
    }
    switch (a.field_->kind()) {
        case Field::Kind::Rationals: return a.rat() == b.rat();
        case Field::Kind::Prime: return a.res() == b.res();
        case Field::Kind::Function:
            return a.fn().num == b.fn().num && a.fn().den == b.fn().den;
    }
    return false;
}

std::string Scalar::str() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals: {
            const BigRat& r = rat();
            if (denominator(r) == 1) return numerator(r).str();
            return numerator(r).str() + "/" + denominator(r).str();
        }
        case Field::Kind::Prime:
            return std::to_string(res()) + " mod " + std::to_string(field_->characteristic_p());
        case Field::Kind::Function: {
            const RatFunc& r = fn();
            if (r.den.is_constant()) return r.num.str();
            return "(" + r.num.str() + ")/(" + r.den.str() + ")";
        }
    }
    return "?";
}

int Scalar::complexity() const {
    switch (field_->kind()) {
        case Field::Kind::Rationals:
        case Field::Kind::Prime:
            return 0;
        case Field::Kind::Function: {
            const RatFunc& r = fn();
            if (r.num.is_constant() && r.den.is_constant())
                return r.num.is_zero() ? 0 : r.num.constant_value().complexity();
            return 1 + static_cast<int>(r.num.terms().size() + r.den.terms().size());
        }
    }
    return 0;
}

}  // namespace nablakit
