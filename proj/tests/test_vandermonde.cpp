#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "helpers.hpp"
#include "nablakit/vandermonde.hpp"

using namespace nablakit;
using nktest::Rng;

namespace {

// Symbolic cross-checks built directly from products of variable differences,
// independent of the vandermonde_weight implementation.
std::vector<MultiPoly> symbolic_nodes(size_t n) {
    std::vector<MultiPoly> zs;
    for (size_t i = 1; i <= n; ++i)
        zs.push_back(MultiPoly::variable(Field::rationals(), "z" + std::to_string(i)));
    return zs;
}

MultiPoly difference_product(const std::vector<MultiPoly>& zs) {
    MultiPoly out = MultiPoly::constant(Scalar::one(Field::rationals()));
    for (size_t a = 0; a < zs.size(); ++a)
        for (size_t b = a + 1; b < zs.size(); ++b) out = out * (zs[b] - zs[a]);
    return out;
}

// Alternating sum  sum_j (-1)^j * dp(z without j) * z_j^k  over symbolic nodes.
MultiPoly alternating_sum(size_t n, unsigned k) {
    auto zs = symbolic_nodes(n);
    MultiPoly acc(Field::rationals());
    for (size_t j = 0; j < n; ++j) {
        std::vector<MultiPoly> rest;
        for (size_t a = 0; a < n; ++a)
            if (a != j) rest.push_back(zs[a]);
        MultiPoly term = difference_product(rest) * zs[j].pow(k);
        acc = (j % 2 == 0) ? acc - term : acc + term;
    }
    return acc;
}

}  // namespace

TEST_CASE("difference products of concrete node lists") {
    auto q = Field::rationals();
    auto node = [&](long long v) { return Scalar::from_int(q, v); };
    CHECK(vandermonde_weight({}) == Scalar::one(q));
    CHECK(vandermonde_weight({node(7)}) == Scalar::one(q));
    CHECK(vandermonde_weight({node(1), node(3)}) == node(2));
    CHECK(vandermonde_weight({node(0), node(1), node(2)}) == node(2));
    CHECK(vandermonde_weight({node(2), node(1), node(0)}) == node(-2));
}

TEST_CASE("weight is alternating under node permutations") {
    Rng rng(47);
    auto q = Field::rationals();
    for (int trial = 0; trial < 20; ++trial) {
        auto z = nktest::rand_distinct(rng, q, 4);
        Scalar base = vandermonde_weight(z);
        auto swapped = z;
        std::swap(swapped[1], swapped[3]);
        CHECK(vandermonde_weight(swapped) == base.neg());
    }
}

TEST_CASE("generic weight polynomial specializes to concrete weights") {
    Rng rng(53);
    auto q = Field::rationals();
    for (size_t n = 2; n <= 4; ++n) {
        MultiPoly generic = vandermonde_poly(q, n, "x");
        for (int trial = 0; trial < 10; ++trial) {
            auto z = nktest::rand_distinct(rng, q, n);
            CHECK(generic.eval(z) == vandermonde_weight(z));
        }
    }
}

TEST_CASE("weight polynomial matches the explicit difference product") {
    for (size_t n = 1; n <= 5; ++n) {
        MultiPoly generic = vandermonde_poly(Field::rationals(), n, "z");
        CHECK(generic == difference_product(symbolic_nodes(n)));
    }
}

TEST_CASE("alternating sum annihilates low degrees symbolically") {
    for (size_t n = 2; n <= 5; ++n) {
        for (unsigned k = 0; k + 2 <= n; ++k) {
            CHECK(alternating_sum(n, k).is_zero());
        }
        // Top degree k = n-1 reproduces the full difference product with sign.
        MultiPoly top = alternating_sum(n, static_cast<unsigned>(n - 1));
        MultiPoly dp = difference_product(symbolic_nodes(n));
        if (n % 2 == 0) {
            CHECK(top == dp);
        } else {
            CHECK(top == MultiPoly(Field::rationals()) - dp);
        }
    }
}

TEST_CASE("lagrange identity on concrete inputs") {
    auto q = Field::rationals();
    auto node = [&](long long v) { return Scalar::from_int(q, v); };
    UniPoly x = UniPoly::x(q);
    // Two distinct nodes kill constants.
    CHECK(lagrange_identity(UniPoly::constant(Scalar::one(q)), {node(4), node(9)}) ==
          Scalar::zero(q));
    // Three nodes do not kill x^2: value is -(difference product).
    CHECK(lagrange_identity(x * x, {node(0), node(1), node(2)}) == node(-2));
    // Four nodes do.
    CHECK(lagrange_identity(x * x, {node(0), node(1), node(2), node(3)}) == Scalar::zero(q));
    CHECK_THROWS_AS((void)lagrange_identity(x, {node(1), node(1)}), std::invalid_argument);
}

TEST_CASE("lagrange identity agrees with the symbolic alternating sum") {
    Rng rng(59);
    std::vector<FieldPtr> fields = {Field::rationals(), Field::prime(101)};
    for (auto& f : fields) {
        for (size_t n = 2; n <= 5; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                auto z = nktest::rand_distinct(rng, f, n, 40);
                UniPoly p = nktest::rand_unipoly(rng, f, nktest::rand_int(rng, 0, static_cast<long long>(n)));
                // Evaluate the independently built symbolic sum at the nodes.
                Scalar expect = Scalar::zero(f);
                for (size_t j = 0; j < n; ++j) {
                    std::vector<Scalar> rest;
                    for (size_t a = 0; a < n; ++a)
                        if (a != j) rest.push_back(z[a]);
                    Scalar w = Scalar::one(f);
                    for (size_t a = 0; a < rest.size(); ++a)
                        for (size_t b = a + 1; b < rest.size(); ++b)
                            w = w * (rest[b] - rest[a]);
                    Scalar term = w * p.eval(z[j]);
                    expect = (j % 2 == 0) ? expect - term : expect + term;
                }
                CHECK(lagrange_identity(p, z) == expect);
            }
        }
    }
}

TEST_CASE("annihilation threshold for monic polynomials") {
    Rng rng(61);
    auto q = Field::rationals();
    for (long d = 0; d <= 3; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
            UniPoly p = nktest::rand_unipoly(rng, q, d);
            auto z = nktest::rand_distinct(rng, q, static_cast<size_t>(d + 2));
            CHECK(lagrange_identity(p, z) == Scalar::zero(q));
            // One node fewer leaves a nonzero value exactly when deg(p) == d.
            auto znarrow = std::vector<Scalar>(z.begin(), z.end() - 1);
            Scalar v = lagrange_identity(p, znarrow);
            Scalar lead = p.leading();
            Scalar w = vandermonde_weight(znarrow);
            Scalar sign = (znarrow.size() % 2 == 0) ? Scalar::one(q) : Scalar::one(q).neg();
            CHECK(v == sign * lead * w);
        }
    }
}
