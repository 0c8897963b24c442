#include "nablakit/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nablakit {

bool GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da > db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        std::uint32_t ea = i < a.size() ? a[i] : 0;
        std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

MultiPoly::MultiPoly(FieldPtr coeff_field) : field_(std::move(coeff_field)) {
    if (!field_) throw std::invalid_argument("polynomial needs a coefficient field");
}

MultiPoly MultiPoly::constant(const Scalar& c) {
    MultiPoly p(c.field());
    if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldPtr& f, const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    MultiPoly p(f);
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Scalar::one(f));
    return p;
}

namespace {

// Exponent remap from a sorted var list into a sorted superset.
Exponents remap(const Exponents& e, const std::vector<size_t>& pos, size_t new_size) {
    Exponents out(new_size, 0);
    for (size_t i = 0; i < e.size(); ++i) out[pos[i]] = e[i];
    return out;
}

std::vector<size_t> positions(const std::vector<std::string>& sub,
                              const std::vector<std::string>& super) {
    std::vector<size_t> pos(sub.size());
    for (size_t i = 0; i < sub.size(); ++i) {
        auto it = std::lower_bound(super.begin(), super.end(), sub[i]);
        pos[i] = static_cast<size_t>(it - super.begin());
    }
    return pos;
}

}  // namespace

MultiPoly MultiPoly::from_terms(FieldPtr f, std::vector<std::string> vars, TermMap terms) {
    MultiPoly p(std::move(f));
    if (!std::is_sorted(vars.begin(), vars.end()))
        std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
        throw std::invalid_argument("duplicate variable name");
    p.vars_ = std::move(vars);
    for (auto& [e, c] : terms) {
        if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent arity mismatch");
        p.insert_term(e, c.embedded(p.field_));
    }
    // Drop variables that no term uses so representations are canonical.
    std::vector<bool> used(p.vars_.size(), false);
    for (auto& [e, c] : p.terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    if (std::find(used.begin(), used.end(), false) != used.end()) {
        std::vector<std::string> kept;
        for (size_t i = 0; i < p.vars_.size(); ++i)
            if (used[i]) kept.push_back(p.vars_[i]);
        TermMap trimmed;
        for (auto& [e, c] : p.terms_) {
            Exponents ne;
            for (size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            trimmed.emplace(std::move(ne), c);
        }
        p.vars_ = std::move(kept);
        p.terms_ = std::move(trimmed);
    }
    return p;
}

void MultiPoly::insert_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(s);
    }
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()) ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](std::uint32_t e) { return e == 0; }));
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar::zero(field_);
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Terms are graded-lex descending, so the first term has maximal degree.
    const Exponents& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0l);
}

long MultiPoly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return terms_.empty() ? -1 : 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    long d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[idx]));
    return d;
}

Scalar MultiPoly::leading_coefficient() const {
    if (terms_.empty()) return Scalar::zero(field_);
    return terms_.begin()->second;
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
    FieldPtr f = join_fields(a.field_, b.field_);
    std::vector<std::string> merged;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(merged));
    auto lift = [&](const MultiPoly& p) {
        MultiPoly out(f);
        out.vars_ = merged;
        auto pos = positions(p.vars_, merged);
        for (auto& [e, c] : p.terms_)
            out.terms_.emplace(remap(e, pos, merged.size()), c.embedded(f));
        return out;
    };
    return {lift(a), lift(b)};
}

MultiPoly MultiPoly::neg() const {
    MultiPoly out(field_);
    out.vars_ = vars_;
    for (auto& [e, c] : terms_) out.terms_.emplace(e, c.neg());
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = align(a, b);
    for (auto& [e, c] : y.terms_) x.insert_term(e, c);
    return MultiPoly::from_terms(x.field_, std::move(x.vars_), std::move(x.terms_));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + b.neg(); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto [x, y] = align(a, b);
    MultiPoly out(x.field_);
    out.vars_ = x.vars_;
    for (auto& [ea, ca] : x.terms_) {
        for (auto& [eb, cb] : y.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    }
    return MultiPoly::from_terms(out.field_, std::move(out.vars_), std::move(out.terms_));
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return MultiPoly(field_);
    MultiPoly out(field_);
    out.vars_ = vars_;
    for (auto& [e, k] : terms_) out.insert_term(e, k * c);
    return from_terms(out.field_, std::move(out.vars_), std::move(out.terms_));
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = constant(Scalar::one(field_));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!same_field(a.field_, b.field_)) return (a - b).is_zero();
    if (a.vars_ != b.vars_) return (a - b).is_zero();
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluation point arity mismatch");
    Scalar acc = Scalar::zero(field_);
    for (auto& [e, c] : terms_) {
        Scalar t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

Scalar MultiPoly::eval_named(const std::map<std::string, Scalar>& bindings) const {
    std::vector<Scalar> point;
    point.reserve(vars_.size());
    for (auto& v : vars_) {
        auto it = bindings.find(v);
        if (it == bindings.end())
            throw std::invalid_argument("eval_named: unbound variable " + v);
        point.push_back(it->second);
    }
    return eval(point);
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Scalar>& bindings) const {
    std::map<std::string, MultiPoly> polys;
    for (auto& [name, val] : bindings) polys.emplace(name, MultiPoly::constant(val));
    return substitute_polys(polys);
}

MultiPoly MultiPoly::substitute_polys(const std::map<std::string, MultiPoly>& bindings) const {
    FieldPtr f = field_;
    for (auto& [name, val] : bindings) f = join_fields(f, val.field());
    MultiPoly acc(f);
    for (auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(c.embedded(f));
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(vars_[i]);
            if (it == bindings.end()) {
                MultiPoly v = MultiPoly::variable(f, vars_[i]);
                term = term * v.pow(e[i]);
            } else {
                term = term * it->second.pow(e[i]);
            }
        }
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::rename_var(const std::string& from, const std::string& to) const {
    if (from == to) return *this;
    std::map<std::string, MultiPoly> b;
    b.emplace(from, MultiPoly::variable(field_, to));
    return substitute_polys(b);
}

MultiPoly MultiPoly::divexact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (g.is_constant()) return f.scaled(g.constant_value().inv());
    // Top reduction on raw term maps with one fixed variable list, so exponent
    // vectors stay positionally comparable throughout.
    auto [ff, gg] = align(f, g);
    TermMap r = ff.terms_;
    TermMap q;
    const Exponents& ltg = gg.terms_.begin()->first;
    const Scalar lcg = gg.terms_.begin()->second;
    while (!r.empty()) {
        const Exponents ltr = r.begin()->first;
        Exponents diff(ltr.size());
        for (size_t i = 0; i < ltr.size(); ++i) {
            if (ltr[i] < ltg[i]) throw std::domain_error("not exactly divisible");
            diff[i] = ltr[i] - ltg[i];
        }
        Scalar c = r.begin()->second / lcg;
        q.emplace(diff, c);
        for (auto& [e, gc] : gg.terms_) {
            Exponents key(diff.size());
            for (size_t i = 0; i < key.size(); ++i) key[i] = diff[i] + e[i];
            auto it = r.find(key);
            Scalar delta = c * gc;
            if (it == r.end()) {
                r.emplace(std::move(key), delta.neg());
            } else {
                it->second = it->second - delta;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    return from_terms(ff.field_, ff.vars_, std::move(q));
}

std::vector<MultiPoly> MultiPoly::var_coefficients(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return {*this};
    size_t idx = static_cast<size_t>(it - vars_.begin());
    long d = degree_in(var);
    std::vector<MultiPoly> out;
    for (long i = 0; i <= d; ++i) out.emplace_back(field_);
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<long>(idx));
    for (auto& [e, c] : terms_) {
        Exponents re;
        for (size_t i = 0; i < e.size(); ++i)
            if (i != idx) re.push_back(e[i]);
        MultiPoly& target = out[e[idx]];
        if (target.vars_.empty() && target.terms_.empty()) target.vars_ = rest;
        target.insert_term(re, c);
    }
    for (auto& p : out) {
        if (p.terms_.empty())
            p = MultiPoly(field_);
        else
            p = from_terms(p.field_, std::move(p.vars_), std::move(p.terms_));
    }
    return out;
}

MultiPoly MultiPoly::from_var_coeffs(const FieldPtr& f, const std::string& var,
                                     const std::vector<MultiPoly>& coeffs) {
    MultiPoly x = MultiPoly::variable(f, var);
    MultiPoly acc(f);
    for (size_t i = 0; i < coeffs.size(); ++i)
        acc = acc + coeffs[i] * x.pow(static_cast<unsigned>(i));
    return acc;
}

namespace {

MultiPoly normalize_monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coefficient().inv());
}

// Content of p viewed in (k[rest])[var]: monic gcd of the var-coefficients.
MultiPoly content_in(const MultiPoly& p, const std::string& var) {
    auto coeffs = p.var_coefficients(var);
    MultiPoly c(p.field());
    for (auto& q : coeffs) {
        c = MultiPoly::gcd(c, q);
        if (!c.is_zero() && c.is_constant()) break;
    }
    return c;
}

// Pseudo-remainder of P by Q with respect to var (both nonzero,
// deg_var P >= deg_var Q >= 1).  Scaled by powers of lc(Q), which the caller
// strips via primitive parts.
MultiPoly prem(const MultiPoly& P, const MultiPoly& Q, const std::string& var) {
    long dq = Q.degree_in(var);
    auto qc = Q.var_coefficients(var);
    MultiPoly lcq = qc.back();
    MultiPoly r = P;
    MultiPoly xvar = MultiPoly::variable(P.field(), var);
    while (!r.is_zero()) {
        long dr = r.degree_in(var);
        if (dr < dq) break;
        auto rc = r.var_coefficients(var);
        MultiPoly lcr = rc.back();
        r = r * lcq - Q * lcr * xvar.pow(static_cast<unsigned>(dr - dq));
    }
    return r;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    if (a.is_constant() || b.is_constant())
        return constant(Scalar::one(join_fields(a.field_, b.field_)));
    auto [x, y] = align(a, b);
    // Main variable: first one used by either operand.
    std::string var;
    for (size_t i = 0; i < x.vars_.size(); ++i) {
        if (x.degree_in(x.vars_[i]) > 0 || y.degree_in(y.vars_[i]) > 0) {
            var = x.vars_[i];
            break;
        }
    }
    MultiPoly ca = content_in(x, var);
    MultiPoly cb = content_in(y, var);
    MultiPoly c = gcd(ca, cb);
    MultiPoly P = divexact(x, ca);
    MultiPoly Q = divexact(y, cb);
    if (P.degree_in(var) < Q.degree_in(var)) std::swap(P, Q);
    while (true) {
        if (Q.degree_in(var) <= 0) {
            // A nonzero var-free remainder means the primitive parts are coprime.
            MultiPoly g = Q.is_zero() ? P : constant(Scalar::one(x.field_));
            return normalize_monic(c * g);
        }
        MultiPoly r = prem(P, Q, var);
        if (r.is_zero()) return normalize_monic(c * Q);
        P = Q;
        Q = divexact(r, content_in(r, var));
    }
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Scalar coeff = c;
        std::string joiner = first ? "" : " + ";
        if (c.field()->kind() == Field::Kind::Rationals && c.rat() < 0) {
            joiner = first ? "-" : " - ";
            coeff = c.neg();
        }
        std::string cs = coeff.str();
        bool needs_parens = cs.find(' ') != std::string::npos ||
                            cs.find('+') != std::string::npos ||
                            (cs.find('-') != std::string::npos && cs[0] != '-') ||
                            cs.find('/') != std::string::npos;
        std::string body;
        if (mono.empty()) {
            body = needs_parens && cs[0] == '-' ? "(" + cs + ")" : cs;
        } else if (coeff.is_one()) {
            body = mono;
        } else {
            body = (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
        }
        out += joiner + body;
        first = false;
    }
    return out;
}

Scalar make_ratfunc(MultiPoly num) {
    MultiPoly den = MultiPoly::constant(Scalar::one(num.field()));
    return make_ratfunc(std::move(num), std::move(den));
}

Scalar make_ratfunc(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    FieldPtr base = join_fields(num.field(), den.field());
    FieldPtr fn_field = Field::function(base);
    if (num.is_zero()) {
        return Scalar::function_raw(
            fn_field, std::make_shared<RatFunc>(RatFunc{
                          MultiPoly(base), MultiPoly::constant(Scalar::one(base))}));
    }
    MultiPoly g = MultiPoly::gcd(num, den);
    if (!g.is_constant() || !g.constant_value().is_one()) {
        num = MultiPoly::divexact(num, g);
        den = MultiPoly::divexact(den, g);
    }
    Scalar lc = den.leading_coefficient();
    if (!lc.is_one()) {
        Scalar li = lc.inv();
        num = num.scaled(li);
        den = den.scaled(li);
    }
    return Scalar::function_raw(
        fn_field, std::make_shared<RatFunc>(RatFunc{std::move(num), std::move(den)}));
}

}  // namespace nablakit
