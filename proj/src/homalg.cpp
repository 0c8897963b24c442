#include "nablakit/homalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "nablakit/linsys.hpp"

namespace nablakit {

Matrix<PolyRing> family_map(const PolyRing& ring, const std::vector<UniPoly>& xs) {
    Matrix<PolyRing> m(ring, xs.size() + 1, xs.size());
    for (size_t s = 0; s < xs.size(); ++s) {
        m.at(0, s) = ring.one();
        m.at(1 + s, s) = xs[s];
    }
    return m;
}

IndivisibleVerdict indivisible_check(const std::vector<UniPoly>& xs) {
    for (auto& x : xs)
        if (x.is_zero()) throw std::invalid_argument("zero element supplied");
    IndivisibleVerdict out;
    out.pass = true;
    for (size_t i = 0; i < xs.size(); ++i)
        if (xs[i].degree() < 1) {
            out.pass = false;
            out.reason = "element " + std::to_string(i) + " is a unit; its cokernel vanishes";
            return out;
        }
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            auto e = ext_gcd(xs[i], xs[j]);
            if (e.g.degree() != 0) {
                out.pass = false;
                out.reason = "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") shares the factor " + e.g.str();
                return out;
            }
            // ext_gcd returns a monic gcd, so g = 1 exactly here.
            UniPoly lhs = e.u * xs[i] + e.v * xs[j];
            if (!(lhs == UniPoly::constant(Scalar::one(xs[i].field()))))
                throw std::logic_error("Bezout certificate failed verification");
            out.certificates.push_back(BezoutPair{i, j, e.u, e.v});
        }
    return out;
}

std::vector<std::uint32_t> idempotent_family(const BitProductRing& ring) {
    std::vector<std::uint32_t> xs;
    for (size_t s = 0; s < ring.n; ++s) xs.push_back(ring.one() ^ (1u << s));
    return xs;
}

IdempotentVerdict idempotent_indivisible_check(size_t n) {
    BitProductRing ring(n);
    if (n < 2) throw std::invalid_argument("need at least two coordinates for pairs");
    auto xs = idempotent_family(ring);
    IdempotentVerdict out;
    out.pass = true;
    std::uint32_t top = ring.one();

    // Cokernel of multiplication by x_s: the image is every mask contained
    // in x_s, so the quotient has two elements (nonzero, free over F_2).
    for (size_t s = 0; s < n; ++s) {
        std::set<std::uint32_t> image;
        for (std::uint32_t a = 0; a <= top; ++a) image.insert(ring.mul(a, xs[s]));
        if (image.size() != (1u << (n - 1))) {
            out.pass = false;
            out.reason = "unexpected image size for element " + std::to_string(s);
            return out;
        }
    }

    for (size_t s = 0; s < n; ++s)
        for (size_t t = s + 1; t < n; ++t) {
            // Annihilator intersection must be trivial.
            for (std::uint32_t a = 1; a <= top; ++a)
                if (ring.mul(a, xs[s]) == 0 && ring.mul(a, xs[t]) == 0) {
                    out.pass = false;
                    out.reason = "common annihilator of elements " + std::to_string(s) +
                                 " and " + std::to_string(t);
                    return out;
                }
            // 1 * x_s + (1 + x_s) * x_t = 1: the complement of x_s is the
            // lone coordinate s, which x_t covers.
            std::uint32_t a = top, b = top ^ xs[s];
            if (ring.add(ring.mul(a, xs[s]), ring.mul(b, xs[t])) != top)
                throw std::logic_error("idempotent certificate failed verification");
            out.certificates.push_back(IdempotentCert{s, t, a, b});
        }
    return out;
}

MultiPoly into_factor(const UniPoly& p, const std::string& var) {
    return p.to_multipoly(var);
}

namespace {

std::string term_key(const std::vector<std::string>& vars, const Exponents& e) {
    std::string key;
    for (size_t i = 0; i < vars.size() && i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!key.empty()) key += "*";
        key += vars[i];
        if (e[i] > 1) key += "^" + std::to_string(e[i]);
    }
    return key;
}

void gen_bounded(size_t pos, unsigned left, std::vector<unsigned>& cur,
                 std::vector<std::vector<unsigned>>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned v = 0; v <= left; ++v) {
        cur[pos] = v;
        gen_bounded(pos + 1, left - v, cur, out);
    }
    cur[pos] = 0;
}

// All exponent vectors over `count` variables of total degree <= bound.
std::vector<std::vector<unsigned>> bounded_monomials(size_t count, unsigned bound) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(count, 0);
    gen_bounded(0, bound, cur, out);
    return out;
}

}  // namespace

BoxQuotientReport tensor_quotient_check(const std::vector<UniPoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("empty family");
    for (auto& p : ps)
        if (p.degree() < 1) throw std::invalid_argument("element of degree < 1");
    FieldPtr k = ps[0].field();
    for (auto& p : ps) k = join_fields(k, p.field());

    std::vector<size_t> dims;
    size_t total = 1;
    for (auto& p : ps) {
        dims.push_back(static_cast<size_t>(p.degree()));
        total *= dims.back();
        if (total > 100000) throw std::invalid_argument("quotient dimension too large");
    }
    auto encode = [&](const std::vector<size_t>& e) {
        size_t idx = 0;
        for (size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + e[i];
        return idx;
    };

    // Multiplication operator by x_i on the monomial box, with the top power
    // rewritten through the monic defining polynomial.
    FieldRing fr(k);
    std::vector<Matrix<FieldRing>> ops;
    for (size_t i = 0; i < ps.size(); ++i) {
        UniPoly m = ps[i].monic();
        Matrix<FieldRing> op(fr, total, total);
        std::vector<size_t> e(dims.size(), 0);
        for (size_t col = 0; col < total; ++col) {
            size_t rest = col;
            for (size_t d = dims.size(); d-- > 0;) {
                e[d] = rest % dims[d];
                rest /= dims[d];
            }
            if (e[i] + 1 < dims[i]) {
                auto up = e;
                ++up[i];
                op.at(encode(up), col) = fr.one();
            } else {
                // x_i^{deg} = -(lower part of the monic polynomial).
                for (size_t pw = 0; pw < dims[i]; ++pw) {
                    Scalar c = m.coeff(pw).embedded(k).neg();
                    if (c.is_zero()) continue;
                    auto down = e;
                    down[i] = pw;
                    op.at(encode(down), col) = fr.add(op.at(encode(down), col), c);
                }
            }
        }
        ops.push_back(std::move(op));
    }

    BoxQuotientReport out;
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j)
            if (!(ops[i] * ops[j] == ops[j] * ops[i])) {
                out.reason = "multiplication operators do not commute";
                return out;
            }
    for (size_t i = 0; i < ops.size(); ++i) {
        // Horner evaluation of the monic polynomial at its own operator.
        UniPoly m = ps[i].monic();
        Matrix<FieldRing> acc(fr, total, total);
        for (long d = m.degree(); d >= 0; --d) {
            acc = acc * ops[i];
            Scalar c = m.coeff(static_cast<size_t>(d)).embedded(k);
            if (!c.is_zero())
                acc = acc + Matrix<FieldRing>::identity(fr, total).scaled(c);
        }
        if (!acc.is_zero()) {
            out.reason = "operator does not satisfy its defining polynomial";
            return out;
        }
    }
    out.pass = true;
    out.dimension = total;
    return out;
}

BoundedSplitVerdict has_left_inverse_bounded(const Matrix<MPolyRing>& m, unsigned degree_bound) {
    const MPolyRing& ring = m.ring();
    FieldPtr k = ring.coeff_field();
    size_t rows = m.rows(), cols = m.cols();
    if (rows < cols) throw std::invalid_argument("map cannot be injective: too few rows");

    std::set<std::string> varset;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            for (auto& v : m.at(i, j).vars()) varset.insert(v);
    std::vector<std::string> vars(varset.begin(), varset.end());

    auto mons = bounded_monomials(vars.size(), degree_bound);
    size_t nm = mons.size();
    auto unknown = [&](size_t i, size_t kk, size_t mi) { return (i * rows + kk) * nm + mi; };

    std::vector<MultiPoly> mon_polys;
    for (auto& e : mons) {
        MultiPoly::TermMap tm;
        tm.emplace(Exponents(e.begin(), e.end()), Scalar::one(k));
        mon_polys.push_back(MultiPoly::from_terms(k, vars, std::move(tm)));
    }

    // One equation per retraction entry (i, j) and result monomial.
    std::map<std::tuple<size_t, size_t, std::string>, LinEq> eqs;
    auto eq_for = [&](size_t i, size_t j, const std::string& key) -> LinEq& {
        auto it = eqs.find({i, j, key});
        if (it == eqs.end()) {
            Scalar rhs = (i == j && key.empty()) ? Scalar::one(k) : Scalar::zero(k);
            it = eqs.emplace(std::make_tuple(i, j, key), LinEq{{}, rhs}).first;
        }
        return it->second;
    };
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = 0; j < cols; ++j) {
            eq_for(i, j, "");  // the identity's constant term must be matched
            for (size_t kk = 0; kk < rows; ++kk) {
                if (ring.is_zero(m.at(kk, j))) continue;
                for (size_t mi = 0; mi < nm; ++mi) {
                    MultiPoly prod = mon_polys[mi] * m.at(kk, j);
                    for (auto& [e, c] : prod.terms()) {
                        LinEq& eq = eq_for(i, j, term_key(prod.vars(), e));
                        size_t u = unknown(i, kk, mi);
                        auto cit = eq.coeffs.find(u);
                        if (cit == eq.coeffs.end())
                            eq.coeffs.emplace(u, c);
                        else
                            cit->second = cit->second + c;
                    }
                }
            }
        }

    std::vector<LinEq> flat;
    flat.reserve(eqs.size());
    for (auto& [key, eq] : eqs) flat.push_back(std::move(eq));
    auto sol = solve_sparse(cols * rows * nm, flat, k);

    BoundedSplitVerdict out;
    if (!sol.feasible) {
        out.reason =
            "no retraction with entries of total degree <= " + std::to_string(degree_bound);
        return out;
    }
    Matrix<MPolyRing> r(ring, cols, rows);
    for (size_t i = 0; i < cols; ++i)
        for (size_t kk = 0; kk < rows; ++kk) {
            MultiPoly acc = ring.zero();
            for (size_t mi = 0; mi < nm; ++mi) {
                Scalar c = sol.assignment[unknown(i, kk, mi)];
                if (!c.is_zero()) acc += mon_polys[mi].scaled(c);
            }
            r.at(i, kk) = acc;
        }
    if (!(r * m == Matrix<MPolyRing>::identity(ring, cols)))
        throw std::logic_error("retraction failed verification");
    out.split = true;
    out.retraction = std::move(r);
    return out;
}

namespace {

void gen_sym(size_t pos, unsigned left, std::vector<unsigned>& cur,
             std::vector<std::vector<unsigned>>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (long v = left; v >= 0; --v) {
        cur[pos] = static_cast<unsigned>(v);
        gen_sym(pos + 1, left - static_cast<unsigned>(v), cur, out);
    }
}

}  // namespace

std::vector<std::vector<unsigned>> sym_basis(size_t r, size_t n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(r, 0);
    gen_sym(0, static_cast<unsigned>(n), cur, out);
    return out;
}

}  // namespace nablakit
