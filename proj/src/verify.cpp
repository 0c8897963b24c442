#include "nablakit/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "nablakit/chain.hpp"
#include "nablakit/fpmod.hpp"
#include "nablakit/homalg.hpp"
#include "nablakit/nabla.hpp"
#include "nablakit/obstruction.hpp"
#include "nablakit/ramsey.hpp"
#include "nablakit/rings.hpp"
#include "nablakit/snf.hpp"
#include "nablakit/tower.hpp"
#include "nablakit/vandermonde.hpp"

namespace nablakit {

namespace {

using Rng = std::mt19937_64;

long long rint(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

std::vector<Scalar> distinct_int_nodes(Rng& rng, const FieldPtr& f, size_t count,
                                       long long span) {
    std::vector<long long> pool(static_cast<size_t>(span));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Scalar> out;
    for (size_t i = 0; i < count; ++i) out.push_back(Scalar::from_int(f, pool[i]));
    return out;
}

UniPoly rand_poly(Rng& rng, const FieldPtr& f, long deg, bool monic = false) {
    std::vector<Scalar> cs;
    for (long i = 0; i <= deg; ++i) cs.push_back(Scalar::from_int(f, rint(rng, -9, 9)));
    if (deg >= 0) {
        if (monic)
            cs.back() = Scalar::from_int(f, 1);
        else if (cs.back().is_zero())
            cs.back() = Scalar::from_int(f, 1);
    }
    return UniPoly(f, cs);
}

TabulatedFunction table_of(const UniPoly& p, const std::vector<Scalar>& nodes,
                           const std::string& axis) {
    Grid g({Axis{axis, nodes}});
    std::vector<Scalar> values;
    for (auto& z : nodes) values.push_back(p.eval(z));
    return TabulatedFunction(g, values);
}

// Annihilation on degree <= d and the signed-weight value at degree d+1.
CheckResult check_nabla(Rng& rng) {
    CheckResult res{"difference operator annihilation and weight law", true, ""};
    size_t trials = 0;
    for (auto field : {Field::rationals(), Field::prime(101)}) {
        long long span = field->kind() == Field::Kind::Prime ? 101 : 60;
        for (int k = 0; k < 100; ++k, ++trials) {
            long d = rint(rng, 0, 5);
            auto nodes = distinct_int_nodes(rng, field, static_cast<size_t>(d) + 2, span);
            auto low = rand_poly(rng, field, d);
            if (!nabla_apply(table_of(low, nodes, "s"), "s", nodes).is_zero()) {
                res.passed = false;
                res.detail = "degree-" + std::to_string(d) + " table survived contraction";
                return res;
            }
            auto edge = rand_poly(rng, field, d + 1, true);
            auto got = nabla_apply(table_of(edge, nodes, "s"), "s", nodes).scalar_value();
            auto want = vandermonde_weight(nodes);
            if (nodes.size() % 2 == 1) want = want.neg();
            if (!(got == want)) {
                res.passed = false;
                res.detail = "monic degree-" + std::to_string(d + 1) + " value mismatch";
                return res;
            }
        }
    }
    res.detail = std::to_string(trials) + " random polynomials over Q and F_101";
    return res;
}

CheckResult check_commutation(Rng& rng) {
    CheckResult res{"contraction commutation and product law", true, ""};
    auto f5 = Field::prime(5);
    std::vector<Scalar> nodes;
    for (long long v = 0; v < 3; ++v) nodes.push_back(Scalar::from_int(f5, v));
    Grid g({Axis{"x", nodes}, Axis{"y", nodes}, Axis{"z", nodes}});
    std::vector<Scalar> values;
    for (size_t i = 0; i < g.npoints(); ++i)
        values.push_back(Scalar::from_int(f5, rint(rng, 0, 4)));
    TabulatedFunction f(g, values);
    const char* axes[3] = {"x", "y", "z"};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (!nabla_commute_check(f, axes[a], nodes, axes[b], nodes)) {
                res.passed = false;
                res.detail = std::string("axes ") + axes[a] + "/" + axes[b] + " disagree";
                return res;
            }

    // Separable tables contract to the product of their 1-D contractions.
    std::vector<TabulatedFunction> parts;
    for (int a = 0; a < 3; ++a) {
        Grid g1({Axis{axes[a], nodes}});
        std::vector<Scalar> vs;
        for (int i = 0; i < 3; ++i) vs.push_back(Scalar::from_int(f5, rint(rng, 0, 4)));
        parts.emplace_back(g1, vs);
    }
    auto prod = TabulatedFunction::tabulate(g, [&](const std::vector<Scalar>& pt) {
        Scalar acc = Scalar::one(f5);
        for (int a = 0; a < 3; ++a)
            acc = acc * parts[a].at({g.node_index(static_cast<size_t>(a), pt[a])});
        return acc;
    });
    auto chained = prod;
    Scalar expect = Scalar::one(f5);
    for (int a = 0; a < 3; ++a) {
        chained = nabla_apply(chained, axes[a], nodes);
        expect = expect * nabla_apply(parts[a], axes[a], nodes).scalar_value();
    }
    if (!(chained.scalar_value() == expect)) {
        res.passed = false;
        res.detail = "separable chain value mismatch";
        return res;
    }
    res.detail = "3 axis pairs plus the separable product identity on a 3x3x3 table";
    return res;
}

CheckResult check_interpolation(Rng& rng) {
    CheckResult res{"interpolation decision versus brute force", true, ""};
    auto f5 = Field::prime(5);
    std::vector<Scalar> nodes;
    for (long long v = 0; v < 5; ++v) nodes.push_back(Scalar::from_int(f5, v));
    Grid g({Axis{"s", nodes}});
    size_t checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Scalar> values;
        for (int i = 0; i < 5; ++i) values.push_back(Scalar::from_int(f5, rint(rng, 0, 4)));
        TabulatedFunction f(g, values);
        for (long d = 0; d <= 3; ++d, ++checked) {
            bool brute = false;
            size_t count = 1;
            for (long i = 0; i <= d; ++i) count *= 5;
            for (size_t code = 0; code < count && !brute; ++code) {
                size_t rest = code;
                std::vector<Scalar> cs;
                for (long i = 0; i <= d; ++i) {
                    cs.push_back(Scalar::from_int(f5, static_cast<long long>(rest % 5)));
                    rest /= 5;
                }
                UniPoly cand(f5, cs);
                bool match = true;
                for (int i = 0; i < 5 && match; ++i) match = cand.eval(nodes[i]) == values[i];
                brute = match;
            }
            if (polynomiality_test(f, d).is_polynomial != brute) {
                res.passed = false;
                res.detail = "verdict mismatch at degree " + std::to_string(d);
                return res;
            }
        }
    }
    res.detail = std::to_string(checked) + " table/degree pairs over F_5";
    return res;
}

CheckResult check_tower(Rng& rng) {
    CheckResult res{"generic symbol certificates", true, ""};
    auto q = Field::rationals();
    size_t count = 0;
    for (size_t size = 3; size <= 6; ++size) {
        Tower tower;
        std::vector<Scalar> sample;
        for (size_t v = 0; v < size; ++v) sample.push_back(Scalar::from_int(q, (long long)v));
        for (long d = 0; d + 2 <= static_cast<long>(size); ++d, ++count) {
            auto w = tower.nonpoly_certificate(sample, d);
            if (w.value.is_zero()) {
                res.passed = false;
                res.detail = "witness vanished symbolically";
                return res;
            }
            UniPoly p = rand_poly(rng, q, d);
            std::map<std::string, Scalar> bind;
            for (auto& s : sample) bind.emplace("X[" + s.str() + "]", p.eval(s));
            if (!substitute_symbols(w.value, bind).is_zero()) {
                res.passed = false;
                res.detail = "witness survived a polynomial substitution";
                return res;
            }
        }
    }
    res.detail = std::to_string(count) + " sample-set/degree pairs";
    return res;
}

CheckResult check_ramsey(Rng& rng) {
    CheckResult res{"pair colorings of small complete graphs", true, ""};
    auto pentagon = builtin_coloring("pentagon", 5);
    if (find_mono_subset(pentagon, 3)) {
        res.passed = false;
        res.detail = "pentagon produced a monochromatic triangle";
        return res;
    }
    std::vector<std::string> ground{"a", "b", "c", "d", "e", "f"};
    for (int trial = 0; trial < 150; ++trial) {
        auto c = Coloring::subsets(ground, 2, [&](const std::vector<size_t>&) {
            return static_cast<int>(rint(rng, 0, 1));
        });
        auto found = find_mono_subset(c, 3);
        bool ok = found && verify_mono_subset(c, *found);
        if (!ok) {
            res.passed = false;
            res.detail = "a K_6 coloring lacked a certified monochromatic triangle";
            return res;
        }
    }
    res.detail = "pentagon exclusion plus 150 random K_6 colorings";
    return res;
}

template <class R>
bool snf_postconditions(const R& ring, const Matrix<R>& m) {
    auto s = smith_normal_form(m);
    if (!(s.U * m * s.V == s.D)) return false;
    if (!ring.is_unit(s.U.determinant()) || !ring.is_unit(s.V.determinant())) return false;
    for (size_t i = 0; i < s.D.rows(); ++i)
        for (size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && !ring.is_zero(s.D.at(i, j))) return false;
    size_t k = std::min(s.D.rows(), s.D.cols());
    for (size_t i = 0; i + 1 < k; ++i) {
        if (ring.is_zero(s.D.at(i, i)) && !ring.is_zero(s.D.at(i + 1, i + 1))) return false;
        if (!ring.is_zero(s.D.at(i, i)) && !ring.divides(s.D.at(i, i), s.D.at(i + 1, i + 1)))
            return false;
    }
    for (size_t i = 0; i < k; ++i)
        if (!ring.eq(s.D.at(i, i), ring.unit_normalize(s.D.at(i, i)))) return false;
    return true;
}

CheckResult check_snf(Rng& rng) {
    CheckResult res{"diagonalization postconditions and split search", true, ""};
    IntRing zz;
    for (int trial = 0; trial < 60; ++trial) {
        Matrix<IntRing> m(zz, 3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) m.at(i, j) = zz.from_int(rint(rng, -9, 9));
        if (!snf_postconditions(zz, m)) {
            res.passed = false;
            res.detail = "postcondition failure on a random 3x3 integer matrix";
            return res;
        }
    }
    // 2x1 columns: verdict must match exhaustive retraction search.
    for (int trial = 0; trial < 30; ++trial) {
        long long a = rint(rng, -3, 3), b = rint(rng, -3, 3);
        if (a == 0 && b == 0) a = 1;
        Matrix<IntRing> m(zz, 2, 1);
        m.at(0, 0) = zz.from_int(a);
        m.at(1, 0) = zz.from_int(b);
        bool exhaustive = false;
        for (long long u = -9; u <= 9 && !exhaustive; ++u)
            for (long long v = -9; v <= 9; ++v)
                if (u * a + v * b == 1) {
                    exhaustive = true;
                    break;
                }
        if (has_left_inverse(m).split != exhaustive) {
            res.passed = false;
            res.detail = "split verdict disagreed with exhaustive search";
            return res;
        }
    }
    res.detail = "60 random 3x3 diagonalizations and 30 exhaustive 2x1 split checks";
    return res;
}

CheckResult check_family_split() {
    CheckResult res{"coprime family splitting", true, ""};
    auto q = Field::rationals();
    PolyRing ring(q);
    size_t count = 0;
    for (unsigned mask = 1; mask < 16; ++mask, ++count) {
        std::vector<UniPoly> xs;
        for (long long s = 0; s < 4; ++s)
            if (mask & (1u << s)) xs.push_back(UniPoly::x_minus(Scalar::from_int(q, s)));
        auto fm = family_map(ring, xs);
        auto v = has_left_inverse(fm);
        bool ok = v.split && v.retraction &&
                  *v.retraction * fm == Matrix<PolyRing>::identity(ring, fm.cols());
        if (!ok) {
            res.passed = false;
            res.detail = "family of size " + std::to_string(xs.size()) + " failed to split";
            return res;
        }
    }
    res.detail = std::to_string(count) + " node subsets of {0,1,2,3}";
    return res;
}

CheckResult check_indivisible() {
    CheckResult res{"indivisible families and box quotients", true, ""};
    auto q = Field::rationals();
    std::vector<UniPoly> xs;
    for (long long s = 0; s < 3; ++s) xs.push_back(UniPoly::x_minus(Scalar::from_int(q, s)));
    if (!indivisible_check(xs).pass) {
        res.passed = false;
        res.detail = "the shifted-variable family failed";
        return res;
    }
    if (!idempotent_indivisible_check(3).pass) {
        res.passed = false;
        res.detail = "the idempotent family failed";
        return res;
    }
    auto x = UniPoly::x(q);
    auto p1 = x * x + UniPoly::constant(Scalar::from_int(q, 1));
    auto p2 = x * x * x - x + UniPoly::constant(Scalar::from_int(q, 1));
    auto box = tensor_quotient_check({p1, p2});
    if (!box.pass || box.dimension != 6) {
        res.passed = false;
        res.detail = "box quotient dimension != 6";
        return res;
    }
    res.detail = "shifted-variable certificates, idempotent model n=3, box dimension 6";
    return res;
}

CheckResult check_chain(Rng& rng) {
    CheckResult res{"tensor complexes and homology", true, ""};
    IntRing zz;
    Matrix<IntRing> two(zz, 1, 1);
    two.at(0, 0) = zz.from_int(2);
    ChainComplex<IntRing> a(zz, {1, 1}, {two});
    auto t = tensor_complexes(a, a);
    auto h0 = homology(t, 0), h1 = homology(t, 1), h2 = homology(t, 2);
    bool frozen = h0.free_rank == 0 && h0.torsion.size() == 1 &&
                  zz.eq(h0.torsion[0], zz.from_int(2)) && h1.free_rank == 0 &&
                  h1.torsion.size() == 1 && zz.eq(h1.torsion[0], zz.from_int(2)) &&
                  h2.is_zero();
    if (!frozen) {
        res.passed = false;
        res.detail = "doubling-square homology mismatch";
        return res;
    }
    for (int trial = 0; trial < 20; ++trial) {
        auto mk = [&](size_t r0, size_t r1) {
            Matrix<IntRing> d(zz, r0, r1);
            for (size_t i = 0; i < r0; ++i)
                for (size_t j = 0; j < r1; ++j) d.at(i, j) = zz.from_int(rint(rng, -4, 4));
            return ChainComplex<IntRing>(zz, {r0, r1}, {d});
        };
        auto prod = tensor_complexes(mk(1 + rng() % 2, 1 + rng() % 2),
                                     mk(1 + rng() % 2, 1 + rng() % 2));
        if (!prod.is_complex()) {
            res.passed = false;
            res.detail = "tensor differential failed d.d = 0";
            return res;
        }
        (void)homology(prod, 1);
    }
    res.detail = "frozen doubling-square example and 20 random tensor products";
    return res;
}

CheckResult check_sym() {
    CheckResult res{"symmetric truncation exactness", true, ""};
    IntRing zz;
    auto stages = sym_truncation(zz, {zz.from_int(1), zz.from_int(0)}, 4);
    for (auto& st : stages)
        if (!st.exact) {
            res.passed = false;
            res.detail = "stage " + std::to_string(st.n) + " not exact";
            return res;
        }
    Matrix<IntRing> eta(zz, 2, 1);
    eta.at(0, 0) = zz.from_int(1);
    auto base = cokernel_shape(eta);
    auto first = stages.front().quotient.structure();
    bool iso = base.free_rank == first.free_rank && base.torsion.size() == first.torsion.size();
    if (!iso) {
        res.passed = false;
        res.detail = "first stage does not match the base cokernel";
        return res;
    }
    res.detail = "4 exact stages over the integers, first stage matching the cokernel";
    return res;
}

CheckResult check_obstruction(Rng& rng) {
    CheckResult res{"retraction compiler versus interpolation", true, ""};
    auto q = Field::rationals();
    size_t count = 0;
    for (size_t size = 3; size <= 5; ++size)
        for (unsigned d = 0; d + 2 <= size; ++d)
            for (int trial = 0; trial < 3; ++trial, ++count) {
                std::vector<Scalar> nodes;
                std::vector<std::pair<Scalar, Scalar>> h;
                Grid g1({Axis{"s", [&] {
                                  std::vector<Scalar> ns;
                                  for (size_t v = 0; v < size; ++v)
                                      ns.push_back(Scalar::from_int(q, (long long)v));
                                  return ns;
                              }()}});
                std::vector<Scalar> values;
                for (size_t v = 0; v < size; ++v) {
                    auto node = Scalar::from_int(q, (long long)v);
                    auto val = Scalar::from_int(q, rint(rng, -9, 9));
                    nodes.push_back(node);
                    h.emplace_back(node, val);
                    values.push_back(val);
                }
                RetractionProblem prob({nodes}, h, d);
                auto sol = solve_compiled(compile(prob));
                auto dec = polynomiality_test(TabulatedFunction(g1, values), d);
                if (sol.feasible != dec.is_polynomial) {
                    res.passed = false;
                    res.detail = "solver and interpolation disagreed";
                    return res;
                }
            }
    auto report = sweep(2, 3, 1, HSource::Symbolic, rng());
    if (!report.witness_contract_holds) {
        res.passed = false;
        res.detail = "a nonzero witness coexisted with a feasible system";
        return res;
    }
    res.detail = std::to_string(count) + " one-axis instances plus a symbolic sweep";
    return res;
}

}  // namespace

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(check_nabla(rng));
    out.push_back(check_commutation(rng));
    out.push_back(check_interpolation(rng));
    out.push_back(check_tower(rng));
    out.push_back(check_ramsey(rng));
    out.push_back(check_snf(rng));
    out.push_back(check_family_split());
    out.push_back(check_indivisible());
    out.push_back(check_chain(rng));
    out.push_back(check_sym());
    out.push_back(check_obstruction(rng));
    return out;
}

}  // namespace nablakit
