#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "nablakit/nabla.hpp"
#include "nablakit/obstruction.hpp"
#include "nablakit/tower.hpp"

using namespace nablakit;

namespace {

std::vector<Scalar> int_nodes(const FieldPtr& f, std::vector<long long> vs) {
    std::vector<Scalar> out;
    for (auto v : vs) out.push_back(Scalar::from_int(f, v));
    return out;
}

RetractionProblem int_problem(const FieldPtr& f, const std::vector<long long>& nodes,
                              const std::function<Scalar(const Scalar&)>& h, unsigned d,
                              size_t axes = 1) {
    auto ns = int_nodes(f, std::vector<long long>(nodes.begin(), nodes.end()));
    std::vector<std::pair<Scalar, Scalar>> table;
    for (auto& node : ns) table.emplace_back(node, h(node));
    return RetractionProblem(std::vector<std::vector<Scalar>>(axes, ns), table, d);
}

TabulatedFunction one_axis_table(const RetractionProblem& p) {
    Grid g({Axis{"s", p.sample(0)}});
    std::vector<Scalar> values;
    for (auto& node : p.sample(0)) values.push_back(p.h_at(node));
    return TabulatedFunction(g, values);
}

}  // namespace

TEST_CASE("single-node instance compiles to the expected tiny system") {
    auto q = Field::rationals();
    auto prob = int_problem(q, {5}, [&](const Scalar&) { return Scalar::from_int(q, 7); }, 0);
    auto sys = compile(prob);
    // One shared f coefficient, one g coefficient, equations for 1 and x1.
    CHECK(sys.unknowns == 2);
    CHECK(sys.equations.size() == 2);
    CHECK(sys.labels[0] == "f1()*1");
    CHECK(sys.labels[1] == "g1(5)*1");
    CHECK(sys.provenance[0] == "t=(5); monomial=1");

    auto sol = solve_compiled(sys);
    REQUIRE(sol.feasible);
    CHECK(sol.assignment[sys.f_unknown(0, 0, 0)] == Scalar::from_int(q, 7));
    CHECK(sol.assignment[sys.g_unknown(0, 0, 0)].is_zero());
    CHECK(evaluation_identity(prob, sys, sol.assignment).is_zero());
}

TEST_CASE("one-axis feasibility agrees with the interpolation decision") {
    auto q = Field::rationals();
    std::mt19937_64 rng(2024);
    for (size_t size = 3; size <= 8; ++size) {
        std::vector<long long> nodes;
        for (size_t v = 0; v < size; ++v) nodes.push_back(static_cast<long long>(v));
        for (unsigned d = 0; d + 2 <= size && d <= 4; ++d) {
            // Random integer values: verdicts must coincide either way.
            auto hr = [&](const Scalar&) {
                return Scalar::from_int(q, static_cast<long long>(rng() % 19) - 9);
            };
            auto prob = int_problem(q, nodes, hr, d);
            auto sol = solve_compiled(compile(prob));
            auto dec = polynomiality_test(one_axis_table(prob), d);
            CHECK(sol.feasible == dec.is_polynomial);

            // Values from a degree-d polynomial: both sides must accept.
            auto hp = [&](const Scalar& s) {
                Scalar acc = Scalar::from_int(q, 1);
                for (unsigned k = 0; k < d; ++k) acc = acc * s + Scalar::from_int(q, 2);
                return acc;
            };
            auto pprob = int_problem(q, nodes, hp, d);
            auto psol = solve_compiled(compile(pprob));
            auto pdec = polynomiality_test(one_axis_table(pprob), d);
            CHECK(psol.feasible);
            CHECK(pdec.is_polynomial);

            // Generic symbolic values: both sides must refuse.
            Tower tower;
            auto hs = [&](const Scalar& s) { return tower.apply(s); };
            auto sprob = int_problem(q, nodes, hs, d);
            auto ssol = solve_compiled(compile(sprob));
            auto sdec = polynomiality_test(one_axis_table(sprob), d);
            CHECK(!ssol.feasible);
            CHECK(!sdec.is_polynomial);
        }
    }
}

TEST_CASE("enough unknowns make every table feasible") {
    auto q = Field::rationals();
    std::mt19937_64 rng(11);
    for (size_t size = 2; size <= 4; ++size) {
        unsigned d = static_cast<unsigned>(size) - 1;  // size <= d+1 interpolates
        auto h = [&](const Scalar&) {
            return Scalar::from_int(q, static_cast<long long>(rng() % 19) - 9);
        };
        for (size_t axes = 1; axes <= 2; ++axes) {
            std::vector<long long> nodes;
            for (size_t v = 0; v < size; ++v) nodes.push_back(static_cast<long long>(v));
            auto prob = int_problem(q, nodes, h, d, axes);
            auto sys = compile(prob);
            auto sol = solve_compiled(sys);
            REQUIRE(sol.feasible);
            CHECK(evaluation_identity(prob, sys, sol.assignment).is_zero());
        }
    }
}

TEST_CASE("cubic table defeats a quadratic bound with a certified refutation") {
    auto q = Field::rationals();
    auto cube = [&](const Scalar& s) { return s * s * s; };
    auto prob = int_problem(q, {0, 1, 2, 3, 4, 5}, cube, 2);
    auto sys = compile(prob);
    auto sol = solve_compiled(sys);
    REQUIRE(!sol.feasible);
    CHECK(verify_null_combination(sys.equations, sol.combination));

    // The independent witness route agrees on any four nodes.
    auto w = nabla_witness(prob, {int_nodes(q, {0, 1, 2, 3})});
    CHECK(!w.is_zero());
    auto w2 = nabla_witness(prob, {int_nodes(q, {2, 3, 4, 5})});
    CHECK(!w2.is_zero());
}

TEST_CASE("two-axis two-node instances always split at degree one") {
    auto q = Field::rationals();
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        auto h = [&](const Scalar&) {
            return Scalar::from_int(q, static_cast<long long>(rng() % 19) - 9);
        };
        auto prob = int_problem(q, {0, 1}, h, 1, 2);
        auto sys = compile(prob);
        auto sol = solve_compiled(sys);
        REQUIRE(sol.feasible);

        auto residual = evaluation_identity(prob, sys, sol.assignment);
        CHECK(residual.is_zero());

        // All-zero coefficients leave minus the product table behind.
        std::vector<Scalar> zero(sys.unknowns, Scalar::zero(sys.field));
        auto base = evaluation_identity(prob, sys, zero);
        bool all_match = true;
        for (size_t i0 = 0; i0 < 2 && all_match; ++i0)
            for (size_t i1 = 0; i1 < 2; ++i1) {
                auto expect = (prob.h_at(prob.sample(0)[i0]) * prob.h_at(prob.sample(1)[i1])).neg();
                if (!(base.at({i0, i1}) == expect)) {
                    all_match = false;
                    break;
                }
            }
        CHECK(all_match);

        // Nudging one shared coefficient must break the identity somewhere.
        auto bent = sol.assignment;
        size_t u = sys.f_unknown(0, 0, 0);
        bent[u] = bent[u] + Scalar::from_int(q, 1);
        CHECK(!evaluation_identity(prob, sys, bent).is_zero());
    }
}

TEST_CASE("witness vanishes on low-degree tables and flags symbolic ones") {
    auto q = Field::rationals();
    auto quad = [&](const Scalar& s) {
        return Scalar::from_int(q, 2) * s * s - Scalar::from_int(q, 3) * s +
               Scalar::from_int(q, 1);
    };
    auto prob = int_problem(q, {0, 1, 2, 3, 4, 5}, quad, 2);
    CHECK(nabla_witness(prob, {int_nodes(q, {0, 1, 2, 3})}).is_zero());
    CHECK(solve_compiled(compile(prob)).feasible);

    // Two axes, three nodes each, degree bound one, generic symbolic values:
    // the witness and the solver refuse independently.
    Tower tower;
    auto hs = [&](const Scalar& s) { return tower.apply(s); };
    auto sym = int_problem(q, {0, 1, 2}, hs, 1, 2);
    auto w = nabla_witness(sym, {int_nodes(q, {0, 1, 2}), int_nodes(q, {0, 1, 2})});
    CHECK(!w.is_zero());
    auto sol = solve_compiled(compile(sym));
    CHECK(!sol.feasible);

    CHECK_THROWS_AS(nabla_witness(sym, {int_nodes(q, {0, 1, 2})}), std::invalid_argument);
    bool threw = false;
    try {
        nabla_witness(sym, {int_nodes(q, {0, 1}), int_nodes(q, {0, 1, 2})});
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);
}

TEST_CASE("problem validation") {
    auto q = Field::rationals();
    auto one = Scalar::from_int(q, 1);
    CHECK_THROWS_AS(RetractionProblem({}, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(RetractionProblem({{}}, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(RetractionProblem({{one, one}}, {{one, one}}, 0), std::invalid_argument);
    // Missing table entry for node 2.
    CHECK_THROWS_AS(
        RetractionProblem({int_nodes(q, {1, 2})}, {{one, one}}, 0), std::invalid_argument);
}

TEST_CASE("sweep cross-tabulates solver and witness verdicts") {
    auto numeric = sweep(1, 4, 1, HSource::RandomRational, 5);
    CHECK(numeric.rows.size() == 3 * 2);  // sizes 2..4, degrees 0..1
    CHECK(numeric.witness_contract_holds);
    for (auto& row : numeric.rows)
        if (row.degree_box) CHECK(row.degree_box_verified);

    auto symbolic = sweep(2, 3, 1, HSource::Symbolic, 5);
    CHECK(symbolic.rows.size() == 2 * 2 * 2);
    CHECK(symbolic.witness_contract_holds);
    for (auto& row : symbolic.rows) {
        // Generic values: feasible exactly when interpolation is free, and
        // every available witness fires.
        CHECK(row.feasible == (row.size <= row.degree_bound + 1));
        if (row.witness_available) {
            CHECK(row.witness_nonzero);
            CHECK(!row.witness.empty());
        }
    }

    CHECK_THROWS_AS(sweep(4, 4, 2, HSource::RandomRational, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep(2, 7, 2, HSource::RandomRational, 1), std::invalid_argument);
    CHECK_THROWS_AS(sweep(2, 4, 5, HSource::RandomRational, 1), std::invalid_argument);
}
