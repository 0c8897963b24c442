#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "nablakit/chain.hpp"
#include "nablakit/fpmod.hpp"
#include "nablakit/rings.hpp"

using namespace nablakit;

namespace {

Matrix<IntRing> int_matrix(const std::vector<std::vector<long long>>& rows) {
    IntRing z;
    Matrix<IntRing> m(z, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = BigInt(rows[i][j]);
    return m;
}

// Two-term complex R --f--> R for a 1x1 differential.
template <class R>
ChainComplex<R> two_term(const R& ring, const typename R::Elem& f) {
    Matrix<R> d(ring, 1, 1);
    d.at(0, 0) = f;
    return ChainComplex<R>(ring, {1, 1}, {d});
}

ChainComplex<IntRing> random_complex(std::mt19937_64& rng) {
    IntRing z;
    // C_1 -> C_0 with a random matrix; always a complex (no composites).
    size_t r0 = 1 + rng() % 3, r1 = 1 + rng() % 3;
    Matrix<IntRing> d(z, r0, r1);
    for (size_t i = 0; i < r0; ++i)
        for (size_t j = 0; j < r1; ++j)
            d.at(i, j) = BigInt(static_cast<long long>(rng() % 7) - 3);
    return ChainComplex<IntRing>(z, {r0, r1}, {d});
}

}  // namespace

TEST_CASE("construction validates shapes") {
    IntRing z;
    CHECK_THROWS_AS(ChainComplex<IntRing>(z, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ChainComplex<IntRing>(z, {1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ChainComplex<IntRing>(z, {2, 1}, {int_matrix({{1}})}),
                    std::invalid_argument);
    ChainComplex<IntRing> ok(z, {1, 2}, {int_matrix({{1, 2}})});
    CHECK(ok.is_complex());

    // d o d = 2x != 0 must be reported, not thrown.
    ChainComplex<IntRing> bad(z, {1, 1, 1}, {int_matrix({{2}}), int_matrix({{1}})});
    CHECK(!bad.is_complex());
}

TEST_CASE("tensor square of multiplication by two computes classical torsion") {
    IntRing z;
    auto a = two_term(z, BigInt(2));
    auto c = tensor_complexes(a, a);
    REQUIRE(c.levels() == 3);
    CHECK(c.rank(0) == 1);
    CHECK(c.rank(1) == 2);
    CHECK(c.rank(2) == 1);
    CHECK(c.is_complex());
    // Bottom differential [2 2]; top (2, -2)^T by the sign rule.
    CHECK(c.d(1) == int_matrix({{2, 2}}));
    CHECK(c.d(2) == int_matrix({{2}, {-2}}));

    auto h0 = homology(c, 0);
    REQUIRE(h0.torsion.size() == 1);
    CHECK(h0.torsion[0] == BigInt(2));
    CHECK(h0.free_rank == 0);

    auto h1 = homology(c, 1);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == BigInt(2));
    CHECK(h1.free_rank == 0);

    CHECK(homology(c, 2).is_zero());
}

TEST_CASE("tensoring with a point complex changes nothing") {
    IntRing z;
    std::mt19937_64 rng(139);
    ChainComplex<IntRing> pt(z, {1}, {});
    for (int trial = 0; trial < 20; ++trial) {
        auto c = random_complex(rng);
        auto left = tensor_complexes(c, pt);
        auto right = tensor_complexes(pt, c);
        REQUIRE(left.levels() == c.levels());
        REQUIRE(right.levels() == c.levels());
        for (size_t k = 0; k < c.levels(); ++k) {
            CHECK(left.rank(k) == c.rank(k));
            CHECK(right.rank(k) == c.rank(k));
        }
        for (size_t k = 1; k < c.levels(); ++k) {
            CHECK(left.d(k) == c.d(k));
            CHECK(right.d(k) == c.d(k));
        }
    }
}

TEST_CASE("coprime polynomial differentials tensor to an acyclic complex") {
    PolyRing ring(Field::rationals());
    auto q = ring.coeff_field();
    auto cx = two_term(ring, UniPoly::x(q));
    auto cx1 = two_term(ring, UniPoly::x_minus(Scalar::one(q)));
    auto c = tensor_complexes(cx, cx1);
    CHECK(c.is_complex());
    CHECK(homology(c, 0).is_zero());
    CHECK(homology(c, 1).is_zero());
    CHECK(homology(c, 2).is_zero());
}

TEST_CASE("tensor products of random pairs always compose to zero") {
    std::mt19937_64 rng(149);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_complex(rng);
        auto b = random_complex(rng);
        auto c = tensor_complexes(a, b);
        CHECK(c.is_complex());
        size_t total = 0;
        for (size_t k = 0; k < c.levels(); ++k) total += c.rank(k);
        size_t expect = 0;
        for (size_t p = 0; p < a.levels(); ++p)
            for (size_t q2 = 0; q2 < b.levels(); ++q2) expect += a.rank(p) * b.rank(q2);
        CHECK(total == expect);
    }
}

TEST_CASE("homology of zero differentials is free of full rank") {
    IntRing z;
    ChainComplex<IntRing> c(z, {2, 3, 1},
                            {Matrix<IntRing>(z, 2, 3), Matrix<IntRing>(z, 3, 1)});
    CHECK(c.is_complex());
    CHECK(homology(c, 0).free_rank == 2);
    CHECK(homology(c, 1).free_rank == 3);
    CHECK(homology(c, 2).free_rank == 1);
    CHECK(homology(c, 0).torsion.empty());
}

TEST_CASE("presentations expose module structure") {
    IntRing z;
    // Z^2 / (2e1, 3e2) = Z/2 + Z/3 = Z/6 in invariant-factor form: SNF
    // normalizes to a single factor 6 after the unit 1.
    Presentation<IntRing> m(int_matrix({{2, 0}, {0, 3}}));
    auto s = m.structure();
    REQUIRE(s.torsion.size() == 1);
    CHECK(s.torsion[0] == BigInt(6));
    CHECK(s.free_rank == 0);

    auto fr = Presentation<IntRing>::free_module(z, 3).structure();
    CHECK(fr.torsion.empty());
    CHECK(fr.free_rank == 3);

    CHECK(m.contains({BigInt(2), BigInt(3)}));
    CHECK(!m.contains({BigInt(1), BigInt(0)}));
}

TEST_CASE("short exact sequence 0 -> Z -> Z -> Z/2 -> 0") {
    IntRing z;
    auto zz = Presentation<IntRing>::free_module(z, 1);
    Presentation<IntRing> z2(int_matrix({{2}}));
    FpMap<IntRing> times2{int_matrix({{2}})};
    FpMap<IntRing> quot{int_matrix({{1}})};
    CHECK(is_short_exact(zz, times2, zz, quot, z2));

    // Multiplication by 3 into the same quotient is not exact at the middle.
    FpMap<IntRing> times3{int_matrix({{3}})};
    CHECK(is_well_defined(zz, times3, zz));
    CHECK(!is_exact_at(zz, times3, zz, quot, z2));

    // The zero map out of Z/2 is well defined; the identity into Z/3 is not.
    Presentation<IntRing> z3(int_matrix({{3}}));
    FpMap<IntRing> ident{int_matrix({{1}})};
    CHECK(!is_well_defined(z2, ident, z3));
}

TEST_CASE("injectivity and surjectivity detect failures") {
    IntRing z;
    auto zz = Presentation<IntRing>::free_module(z, 1);
    Presentation<IntRing> z4(int_matrix({{4}}));
    Presentation<IntRing> z2(int_matrix({{2}}));

    // Z/2 -> Z/4 by multiplication by 2 is injective and well defined.
    FpMap<IntRing> in2{int_matrix({{2}})};
    CHECK(is_well_defined(z2, in2, z4));
    CHECK(is_injective(z2, in2, z4));
    CHECK(!is_surjective(in2, z2, z4));

    // Z/4 -> Z/2 quotient is surjective, not injective.
    FpMap<IntRing> q{int_matrix({{1}})};
    CHECK(is_well_defined(z4, q, z2));
    CHECK(!is_injective(z4, q, z2));
    CHECK(is_surjective(q, z4, z2));

    // 2: Z -> Z is injective, not surjective.
    FpMap<IntRing> two{int_matrix({{2}})};
    CHECK(is_injective(zz, two, zz));
    CHECK(!is_surjective(two, zz, zz));
}

TEST_CASE("homology over the polynomial ring with shared roots") {
    PolyRing ring(Field::rationals());
    auto q = ring.coeff_field();
    // x and x(x-1) share the root 0: H_0 = Q[x]/(x, x(x-1)) = Q[x]/(x).
    auto cx = two_term(ring, UniPoly::x(q));
    auto cxx1 = two_term(ring, UniPoly::x(q) * UniPoly::x_minus(Scalar::one(q)));
    auto c = tensor_complexes(cx, cxx1);
    CHECK(c.is_complex());
    auto h0 = homology(c, 0);
    REQUIRE(h0.torsion.size() == 1);
    CHECK(h0.torsion[0] == UniPoly::x(q));
    CHECK(h0.free_rank == 0);
    // H_1 = Tor_1(Q[x]/x, Q[x]/x(x-1)) = Q[x]/(x) as well.
    auto h1 = homology(c, 1);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == UniPoly::x(q));
}
