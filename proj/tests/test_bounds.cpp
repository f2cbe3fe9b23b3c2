#include "iset/bounds.hpp"

#include "iset/ensemble.hpp"
#include "iset/errors.hpp"

#include <doctest.h>

#include "fixtures.hpp"

#include <cmath>

using namespace iset;

TEST_CASE("bounds on the Turan complement") {
    const Graph g = gen_clique_union(800, 3); // n=2400, t=2
    const BoundsReport report = evaluate_bounds(g, true);
    CHECK(report.t == doctest::Approx(2.0));
    CHECK(report.turan_subset_log2 == doctest::Approx(800.0));
    REQUIRE(report.exact_log2.has_value());
    CHECK(*report.exact_log2 == doctest::Approx(1600.0).epsilon(1e-9));
    REQUIRE(report.prop_log2.has_value());
    CHECK(*report.prop_log2 == doctest::Approx(4.8).epsilon(1e-12));
    REQUIRE(report.alpha.has_value());
    CHECK(*report.alpha == 800);
    CHECK_FALSE(report.hypotheses.triangle_free);
}

TEST_CASE("bounds on C5") {
    const BoundsReport report = evaluate_bounds(fixtures::cycle(5), true);
    REQUIRE(report.upper_sum_log2.has_value());
    CHECK(*report.upper_sum_log2 == doctest::Approx(4.0).epsilon(1e-12));
    REQUIRE(report.exact_log2.has_value());
    CHECK(*report.exact_log2 == doctest::Approx(std::log2(11.0)).epsilon(1e-12));
    CHECK(report.hypotheses.triangle_free);
    CHECK_FALSE(report.hypotheses.prop_range); // needs t <= n/800
}

TEST_CASE("formula-only evaluation") {
    const BoundsReport report = evaluate_bound_formulas(1000000, 1000.0);
    REQUIRE(report.main_log2.has_value());
    const double log_t = std::log2(1000.0);
    CHECK(*report.main_log2 ==
          doctest::Approx(1000000.0 / (2400.0 * 1000.0) * log_t * log_t).epsilon(1e-12));
    CHECK(*report.main_log2 == doctest::Approx(41.38).epsilon(1e-3));
    CHECK(report.hypotheses.prop_range); // 2 <= 1000 <= 1250
}

TEST_CASE("log-bearing formulas are withheld for t <= 1") {
    const BoundsReport report = evaluate_bounds(fixtures::empty(5), false);
    CHECK_FALSE(report.hypotheses.log_range);
    CHECK_FALSE(report.prop_log2.has_value());
    CHECK_FALSE(report.main_log2.has_value());
    CHECK(report.turan_subset_log2 == doctest::Approx(5.0));
}

TEST_CASE("sandwich fixtures") {
    const SandwichVerdict petersen = verify_sandwich(fixtures::petersen());
    CHECK(petersen.count == "76");
    CHECK(petersen.alpha == 4);
    CHECK(petersen.all());

    const SandwichVerdict k2 = verify_sandwich(fixtures::complete(2));
    CHECK(k2.count == "3");
    CHECK(k2.all()); // 3 >= 2 and 3 <= 1+2, both tight-ish

    const SandwichVerdict e5 = verify_sandwich(fixtures::empty(5));
    CHECK(e5.count == "32");
    CHECK(e5.alpha == 5);
    CHECK(e5.all()); // equality on both sides
}

TEST_CASE("sandwich holds on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = gen_gnp(4 + seed % 13, 0.3, 1700 + seed);
        CHECK(verify_sandwich(g).all());
    }
}

TEST_CASE("exact count dominates the Turan subset bound") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = gen_gnp(6 + seed % 10, 0.4, 1800 + seed);
        const BoundsReport report = evaluate_bounds(g, true);
        REQUIRE(report.exact_log2.has_value());
        CHECK(*report.exact_log2 >= report.turan_subset_log2 - 1e-9);
    }
}

TEST_CASE("max-degree neighborhood of a triangle-free graph is independent") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = gen_triangle_free_process(24, 1900 + seed);
        std::size_t best = 0;
        Vertex arg = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) > best) {
                best = g.degree(v);
                arg = v;
            }
        }
        const auto nb = g.neighbors(arg);
        const VertexSet hood(std::vector<Vertex>(nb.begin(), nb.end()));
        CHECK(is_independent(g, hood));
        // hence i(G) >= 2^Delta
        const BoundsReport report = evaluate_bounds(g, true);
        REQUIRE(report.exact_log2.has_value());
        CHECK(*report.exact_log2 >= report.neighborhood_log2 - 1e-9);
    }
}

TEST_CASE("budget exhaustion is flagged, not fatal") {
    const Graph g = gen_gnp(60, 0.2, 2025);
    const BoundsReport report = evaluate_bounds(g, true, CountBudget{3});
    CHECK(report.budget_exhausted);
    CHECK_FALSE(report.exact_log2.has_value());
    CHECK_THROWS_AS(verify_sandwich(g, CountBudget{3}), BudgetExhausted);
}
