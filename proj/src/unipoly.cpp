#include "nablakit/unipoly.hpp"

#include <stdexcept>

namespace nablakit {

UniPoly::UniPoly(FieldPtr field) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("polynomial needs a field");
}

UniPoly::UniPoly(FieldPtr field, std::vector<Scalar> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& c : c_) c = c.embedded(field_);
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::x(const FieldPtr& f) {
    return UniPoly(f, {Scalar::zero(f), Scalar::one(f)});
}

UniPoly UniPoly::x_minus(const Scalar& s) {
    return UniPoly(s.field(), {s.neg(), Scalar::one(s.field())});
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p) {
    if (p.vars().size() > 1)
        throw std::invalid_argument("polynomial is not univariate");
    if (p.vars().empty()) {
        return p.is_zero() ? UniPoly(p.field()) : constant(p.constant_value());
    }
    std::vector<Scalar> coeffs(static_cast<size_t>(p.total_degree()) + 1,
                               Scalar::zero(p.field()));
    for (auto& [e, c] : p.terms()) coeffs[e[0]] = c;
    return UniPoly(p.field(), std::move(coeffs));
}

Scalar UniPoly::leading() const {
    return c_.empty() ? Scalar::zero(field_) : c_.back();
}

Scalar UniPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : Scalar::zero(field_);
}

UniPoly UniPoly::neg() const {
    UniPoly out(field_);
    out.c_.reserve(c_.size());
    for (auto& c : c_) out.c_.push_back(c.neg());
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    FieldPtr f = join_fields(a.field_, b.field_);
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar::zero(f));
    for (size_t i = 0; i < c.size(); ++i) {
        Scalar s = Scalar::zero(f);
        if (i < a.c_.size()) s = s + a.c_[i];
        if (i < b.c_.size()) s = s + b.c_[i];
        c[i] = s;
    }
    return UniPoly(f, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b.neg(); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    FieldPtr f = join_fields(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return UniPoly(f);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(f));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(f, std::move(c));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
    UniPoly out(field_);
    if (s.is_zero()) return out;
    out.c_.reserve(c_.size());
    for (auto& c : c_) out.c_.push_back(c * s);
    out.trim();
    return out;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return (a - b).is_zero();
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

Scalar UniPoly::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(field_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    FieldPtr f = join_fields(a.field_, b.field_);
    r = a;
    q = UniPoly(f);
    if (a.degree() < b.degree()) return;
    q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Scalar::zero(f));
    Scalar lb_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - b.degree());
        Scalar coef = r.leading() * lb_inv;
        q.c_[shift] = q.c_[shift] + coef;
        // r -= coef * x^shift * b
        for (size_t i = 0; i < b.c_.size(); ++i)
            r.c_[shift + i] = r.c_[shift + i] - coef * b.c_[i];
        r.trim();
    }
    q.trim();
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly q(x.field_), r(x.field_);
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x.monic();
}

UniPoly UniPoly::ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& u, UniPoly& v) {
    FieldPtr f = join_fields(a.field_, b.field_);
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = constant(Scalar::one(f)), s1(f);
    UniPoly t0(f), t1 = constant(Scalar::one(f));
    while (!r1.is_zero()) {
        UniPoly q(f), r(f);
        divmod(r0, r1, q, r);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) {
        u = UniPoly(f);
        v = UniPoly(f);
        return r0;
    }
    Scalar lead_inv = r0.leading().inv();
    u = s0.scaled(lead_inv);
    v = t0.scaled(lead_inv);
    return r0.monic();
}

MultiPoly UniPoly::to_multipoly(const std::string& var) const {
    MultiPoly x = MultiPoly::variable(field_, var);
    MultiPoly acc(field_);
    for (size_t i = 0; i < c_.size(); ++i)
        acc = acc + MultiPoly::constant(c_[i]) * x.pow(static_cast<unsigned>(i));
    return acc;
}

std::string UniPoly::str(const std::string& var) const { return to_multipoly(var).str(); }

}  // namespace nablakit
