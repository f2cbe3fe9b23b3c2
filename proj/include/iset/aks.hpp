#pragma once

#include "iset/graph.hpp"
#include "iset/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iset {

// Configuration of the sampling algorithm. k and R default to the derived
// values floor(n/200t) and floor(log2(t)/2); explicit overrides let small
// graphs avoid the floor underflow.
struct AksParams {
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> iteration_cap; // R
    double c10 = 1.0;
    std::optional<double> nu_floor; // default 1 - 1/log2(t)
    double low_degree_factor = 10.0;
    double edge_cap_factor = 1.0 / 50.0;
    std::uint32_t max_attempts = 64;
    std::uint64_t seed = 1;
    bool strict_hypotheses = false;

    void validate() const;
};

struct IterationRecord {
    std::size_t index = 0;
    std::size_t n_i = 0;
    Rational t_i;
    std::optional<double> nu_i; // undefined at index 0
    VertexSet sample;           // H_{i+1}, host labels
    std::size_t sample_edges = 0;
    std::uint32_t attempts = 0;
    bool accepted = false;
    std::size_t isolated_count = 0;
    bool sampling_exhausted = false; // rejection sampling gave up here
};

enum class AksPath { TuranFallback, SparseUnion };

struct AksOutcome {
    AksPath path = AksPath::SparseUnion;
    VertexSet independent_set;
    std::vector<IterationRecord> trace;
    std::size_t completed_iterations = 0;
    std::vector<std::string> warnings;
    // parameters after defaulting, echoed in reports
    std::uint64_t resolved_k = 0;
    std::uint64_t resolved_iteration_cap = 0;
    double resolved_nu_floor = 0.0;
};

struct SampleDraw {
    VertexSet sample;
    std::size_t internal_edges;
};

// Uniformly random k-subset of `candidates` plus its internal edge count.
SampleDraw sparse_sample_step(const Graph& g, const VertexSet& candidates, std::size_t k,
                              Rng& rng);

struct LemmaStep {
    VertexSet sample;    // H
    VertexSet survivors; // M
    IterationRecord record;
};

// One application of the sampling lemma to g: redraw until the sample is
// sparse (e(H) <= edge_cap_factor*k), the survivor graph keeps more than half
// the vertices, and the vertex/degree ratio is preserved up to nu. Empty
// result means the caller should fall back.
std::optional<LemmaStep> lemma_step(const Graph& g, const AksParams& params, double nu,
                                    Rng& rng);

AksOutcome run_aks(const Graph& g, const AksParams& params);

// Greedy minimum-degree independent set; always reaches ceil(n/(t+1)).
VertexSet turan_greedy(const Graph& g);

// Degree-zero vertices of h_graph.
VertexSet extract_isolated(const Graph& h_graph);

// The ratio-preservation factor 1 - 1/t - c10*sqrt(t/n); equals 1 on an
// edgeless graph.
double nu_factor(std::size_t n, const Rational& t, double c10);

} // namespace iset
