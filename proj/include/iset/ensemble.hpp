#pragma once

#include "iset/aks.hpp"
#include "iset/graph.hpp"
#include "iset/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iset {

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);
Graph gen_bipartite(std::size_t n_left, std::size_t n_right, double p, std::uint64_t seed);
// Uniformly random edge order, keeping every edge that closes no triangle.
// Runs to saturation, so the result is maximal triangle-free.
Graph gen_triangle_free_process(std::size_t n, std::uint64_t seed);
Graph gen_clique_union(std::size_t r, std::size_t k);

// One Monte-Carlo draw of the lemma's sampling model: H is a uniform k-set
// from the low-degree pool, M its survivor set.
struct LemmaSample {
    std::uint64_t surviving_vertices; // n(M)
    std::uint64_t surviving_edges;    // e(M)
    std::uint64_t sample_edges;       // e(H)
};

// Raw per-trial observables. Trial i is driven by a seed derived from
// (seed, i), so the output is independent of worker count and order.
std::vector<LemmaSample> mc_lemma_samples(const Graph& g, std::size_t k, std::size_t trials,
                                          std::uint64_t seed, unsigned workers = 1);

struct ObservableStats {
    double mean = 0.0;
    double sample_variance = 0.0;
    double std_error = 0.0;
    double confidence_radius = 0.0;
};

struct EnsembleStats {
    std::size_t trials = 0;
    double sigma_multiplier = 0.0;
    ObservableStats surviving_vertices;
    ObservableStats surviving_edges;
    ObservableStats sample_edges;
};

EnsembleStats mc_lemma_stats(const Graph& g, std::size_t k, std::size_t trials,
                             std::uint64_t seed, double sigma_multiplier = 4.0,
                             unsigned workers = 1);

// Exact E[e(H)] for a uniform k-subset of `candidates`:
// e(g[candidates]) * k(k-1) / (|candidates| (|candidates|-1)). Zero for k<2.
Rational exact_expected_edges(const Graph& g, const VertexSet& candidates, std::size_t k);

enum class Verdict { Consistent, ConsistentConditional, Violated, HypothesesUnmet };

std::string verdict_name(Verdict v);

struct ClaimRecord {
    std::string claim;
    std::optional<double> bound;
    std::optional<double> estimate;
    std::optional<double> margin_sigma; // slack in std-error units; negative leans toward violation
    Verdict verdict = Verdict::Consistent;
    std::string note;
};

struct LemmaReport {
    EnsembleStats stats;
    std::size_t pool_size = 0;
    Rational pool_expected_sample_edges; // exact hypergeometric value over the pool
    std::vector<ClaimRecord> claims;

    bool any_violated() const;
};

// Evaluates the lemma's three expectation bounds, three variance bounds, and
// the conditional ratio-preservation claim against Monte-Carlo estimates.
LemmaReport check_lemma_bounds(const Graph& g, std::size_t k, std::size_t trials,
                               std::uint64_t seed, double sigma_multiplier = 4.0,
                               double c10 = 1.0, unsigned workers = 1);

// Repeated-run diversity count: number of distinct independent sets returned
// by run_aks over `runs` seeds derived from (seed, run index).
std::size_t distinct_sets_experiment(const Graph& g, const AksParams& params, std::size_t runs,
                                     std::uint64_t seed);

} // namespace iset
