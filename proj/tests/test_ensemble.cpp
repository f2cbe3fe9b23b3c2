#include "iset/ensemble.hpp"

#include "iset/errors.hpp"
#include "iset/exact.hpp"

#include <doctest.h>

#include "fixtures.hpp"

#include <cmath>

using namespace iset;

TEST_CASE("gnp endpoints") {
    CHECK(gen_gnp(4, 0.0, 1).edge_count() == 0);
    CHECK(gen_gnp(4, 1.0, 1).edge_count() == 6);
    CHECK_THROWS_AS(gen_gnp(4, 1.5, 1), InputError);
}

TEST_CASE("gnp edge counts match binomial statistics") {
    // mean edge count over independent seeds vs C(n,2)p, 4 sigma on the mean
    const std::size_t n = 300;
    const double p = 2.0 / 299.0;
    const std::size_t seeds = 200;
    const double pairs = static_cast<double>(n * (n - 1) / 2);
    double total = 0;
    for (std::uint64_t s = 0; s < seeds; ++s)
        total += static_cast<double>(gen_gnp(n, p, 9000 + s).edge_count());
    const double mean = total / static_cast<double>(seeds);
    const double sd_single = std::sqrt(pairs * p * (1 - p));
    const double radius = 4.0 * sd_single / std::sqrt(static_cast<double>(seeds));
    CHECK(std::abs(mean - pairs * p) <= radius);
}

TEST_CASE("bipartite generator") {
    const Graph k33 = gen_bipartite(3, 3, 1.0, 1);
    CHECK(k33.edge_count() == 9);
    CHECK(is_triangle_free(k33));
    CHECK(gen_bipartite(2, 2, 0.0, 1).edge_count() == 0);
    for (std::uint64_t s = 0; s < 20; ++s)
        CHECK(is_triangle_free(gen_bipartite(30, 30, 0.2, 100 + s)));
}

TEST_CASE("bipartite average degree concentrates") {
    const Graph g = gen_bipartite(1000, 1000, 10.0 / 1000.0, 12345);
    const double t = g.average_degree_approx();
    CHECK(t > 9.0);
    CHECK(t < 11.0);
}

TEST_CASE("triangle-free process on 3 vertices is always a path") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Graph g = gen_triangle_free_process(3, s);
        CHECK(g.edge_count() == 2);
        CHECK(is_triangle_free(g));
    }
}

TEST_CASE("triangle-free process is triangle-free and maximal") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const std::size_t n = 20 + 5 * (s % 5);
        const Graph g = gen_triangle_free_process(n, 400 + s);
        CHECK(is_triangle_free(g));
        // maximal: every non-edge closes a triangle
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (g.adjacent(u, v)) continue;
                bool common = false;
                for (Vertex w : g.neighbors(u))
                    if (g.adjacent(v, w)) common = true;
                CHECK(common);
            }
        }
    }
}

TEST_CASE("clique union shapes") {
    const Graph e3 = gen_clique_union(3, 1);
    CHECK(e3.vertex_count() == 3);
    CHECK(e3.edge_count() == 0);

    const Graph two_k3 = gen_clique_union(2, 3);
    CHECK(count_independent_sets(two_k3) == 16);
    CHECK(two_k3.average_degree() == Rational(2));
}

TEST_CASE("clique union counts are (k+1)^r up to rk = 10^4") {
    const Graph g = gen_clique_union(2500, 4);
    const BigCount count = count_independent_sets(g);
    CHECK(count.value == boost::multiprecision::pow(BigInt(5), 2500u));
}

TEST_CASE("exact expected edges") {
    const Graph k2 = fixtures::complete(2);
    CHECK(exact_expected_edges(k2, VertexSet::full(2), 2) == Rational(1));

    const Graph c5 = fixtures::cycle(5);
    CHECK(exact_expected_edges(c5, VertexSet::full(5), 2) == Rational(1, 2));
    CHECK(exact_expected_edges(c5, VertexSet::full(5), 3) == Rational(3, 2));
    CHECK(exact_expected_edges(c5, VertexSet::full(5), 1) == Rational(0));
    CHECK_THROWS_AS(exact_expected_edges(c5, VertexSet({0, 1}), 3), DegenerateInput);
}

TEST_CASE("mc stats on an edgeless graph are exact") {
    const EnsembleStats stats = mc_lemma_stats(fixtures::empty(50), 5, 2000, 77);
    CHECK(stats.sample_edges.mean == 0.0);
    CHECK(stats.sample_edges.sample_variance == 0.0);
    CHECK(stats.surviving_vertices.mean == 45.0);
    CHECK(stats.surviving_vertices.sample_variance == 0.0);
}

TEST_CASE("mc e(H) mean matches the hypergeometric value on K33") {
    const Graph k33 = gen_bipartite(3, 3, 1.0, 1);
    const Rational exact = exact_expected_edges(k33, VertexSet::full(6), 2);
    CHECK(exact == Rational(3, 5));
    const EnsembleStats stats = mc_lemma_stats(k33, 2, 100000, 1234);
    const double radius = 4.0 * stats.sample_edges.std_error;
    CHECK(std::abs(stats.sample_edges.mean - to_double(exact)) <= radius);
}

TEST_CASE("mc n(M) mean matches pair enumeration on C5") {
    const Graph c5 = fixtures::cycle(5);
    // enumeration oracle over all C(5,2) samples of the survivor-set model
    double total = 0;
    std::size_t pairs = 0;
    for (Vertex u = 0; u < 5; ++u) {
        for (Vertex v = u + 1; v < 5; ++v) {
            total += static_cast<double>(survivor_set(c5, VertexSet({u, v})).size());
            ++pairs;
        }
    }
    const double exact_mean = total / static_cast<double>(pairs);
    CHECK(exact_mean == doctest::Approx(0.5)); // frozen from the oracle
    const EnsembleStats stats = mc_lemma_stats(c5, 2, 100000, 4321);
    const double radius = std::max(4.0 * stats.surviving_vertices.std_error, 1e-9);
    CHECK(std::abs(stats.surviving_vertices.mean - exact_mean) <= radius);
}

TEST_CASE("mc observables match the definitional survivor-set path per trial") {
    // replay each trial's draw through the public primitives
    for (std::uint64_t graph_seed = 0; graph_seed < 4; ++graph_seed) {
        const Graph g = gen_gnp(80, 0.06, 6000 + graph_seed);
        const std::size_t k = 3;
        const VertexSet pool = low_degree_set(g, Rational(10) * g.average_degree());
        if (pool.size() < k) continue;
        const std::uint64_t base_seed = 320 + graph_seed;
        const auto samples = mc_lemma_samples(g, k, 200, base_seed);
        for (std::size_t trial = 0; trial < samples.size(); ++trial) {
            Rng rng(derive_seed(base_seed, trial));
            const SampleDraw draw = sparse_sample_step(g, pool, k, rng);
            const VertexSet m = survivor_set(g, draw.sample);
            CHECK(samples[trial].surviving_vertices == m.size());
            CHECK(samples[trial].surviving_edges == edges_within(g, m));
            CHECK(samples[trial].sample_edges == draw.internal_edges);
        }
    }
}

TEST_CASE("mc trials are order- and worker-independent") {
    const Graph g = gen_bipartite(100, 100, 0.05, 9);
    const auto long_run = mc_lemma_samples(g, 3, 400, 31, 1);
    const auto short_run = mc_lemma_samples(g, 3, 150, 31, 1);
    for (std::size_t i = 0; i < short_run.size(); ++i) {
        CHECK(short_run[i].surviving_vertices == long_run[i].surviving_vertices);
        CHECK(short_run[i].surviving_edges == long_run[i].surviving_edges);
        CHECK(short_run[i].sample_edges == long_run[i].sample_edges);
    }
    const EnsembleStats seq = mc_lemma_stats(g, 3, 400, 31, 4.0, 1);
    const EnsembleStats par = mc_lemma_stats(g, 3, 400, 31, 4.0, 4);
    CHECK(seq.surviving_vertices.mean == par.surviving_vertices.mean);
    CHECK(seq.surviving_edges.sample_variance == par.surviving_edges.sample_variance);
    CHECK(seq.sample_edges.std_error == par.sample_edges.std_error);
}

TEST_CASE("mc rejects an undersized pool") {
    CHECK_THROWS_AS(mc_lemma_stats(fixtures::empty(3), 4, 100, 1), DegenerateInput);
}

TEST_CASE("lemma bounds hold on a sparse bipartite graph") {
    const Graph g = gen_bipartite(500, 500, 8.0 / 500.0, 2024);
    const LemmaReport report = check_lemma_bounds(g, 2, 20000, 99, 4.0);
    REQUIRE(report.claims.size() == 7);
    CHECK_FALSE(report.any_violated());
    for (const ClaimRecord& claim : report.claims) {
        CHECK(claim.verdict != Verdict::Violated);
        CHECK(claim.verdict != Verdict::HypothesesUnmet);
    }
}

TEST_CASE("lemma bounds on an edgeless graph are trivially consistent") {
    const LemmaReport report = check_lemma_bounds(fixtures::empty(60), 2, 500, 5);
    CHECK_FALSE(report.any_violated());
}

TEST_CASE("non-triangle-free input yields hypotheses-unmet") {
    const LemmaReport report = check_lemma_bounds(fixtures::complete(3), 2, 100, 5);
    for (const ClaimRecord& claim : report.claims) CHECK(claim.verdict == Verdict::HypothesesUnmet);
}

TEST_CASE("distinct sets on the edgeless 6-graph cover all pairs") {
    AksParams params;
    params.k = 2;
    params.iteration_cap = 1;
    CHECK(distinct_sets_experiment(fixtures::empty(6), params, 10000, 17) == 15);
}

TEST_CASE("distinct sets on a clique collapse to the single greedy outcome") {
    AksParams params;
    params.k = 2;
    CHECK(distinct_sets_experiment(fixtures::complete(8), params, 200, 23) == 1);
}

TEST_CASE("distinct sets on a bipartite graph stay diverse") {
    const Graph g = gen_bipartite(100, 100, 4.0 / 100.0, 2222); // n=200, t ~ 4
    AksParams params;
    params.k = 2;
    params.iteration_cap = 2;
    const std::size_t distinct = distinct_sets_experiment(g, params, 10000, 31);
    CHECK(distinct >= 100);
    CHECK(distinct == 10000); // regression pin for this seed
}
