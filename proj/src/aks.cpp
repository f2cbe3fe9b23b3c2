#include "iset/aks.hpp"

#include "iset/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace iset {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::uint64_t derive_sample_size(const Graph& g) {
    // floor(n / 200t) = floor(n^2 / 400e)
    const std::size_t n = g.vertex_count();
    const std::size_t e = g.edge_count();
    if (e == 0)
        throw DegenerateInput("degenerate average degree: cannot derive k on an edgeless graph");
    return static_cast<std::uint64_t>(n) * n / (400ULL * e);
}

std::uint64_t derive_iteration_cap(const Rational& t) {
    if (t <= 1) return 0;
    return static_cast<std::uint64_t>(std::floor(std::log2(to_double(t)) / 2.0));
}

VertexSet map_to_host(const VertexSet& local, const std::vector<Vertex>& to_host) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_host[v]);
    return VertexSet(std::move(out));
}

struct StepResult {
    IterationRecord record;
    VertexSet sample;
    VertexSet survivors;
    VertexSet isolated;
};

StepResult lemma_step_impl(const Graph& g, std::uint64_t k, const AksParams& params, double nu,
                           Rng& rng) {
    const std::size_t n = g.vertex_count();
    const std::size_t e = g.edge_count();
    const Rational t = g.average_degree();

    StepResult result;
    result.record.n_i = n;
    result.record.t_i = t;

    const VertexSet pool = low_degree_set(g, Rational(params.low_degree_factor) * t);
    if (pool.size() < k) {
        result.record.sampling_exhausted = true;
        return result;
    }

    const double edge_cap = params.edge_cap_factor * static_cast<double>(k);
    for (std::uint32_t attempt = 1; attempt <= params.max_attempts; ++attempt) {
        SampleDraw draw = sparse_sample_step(g, pool, k, rng);
        result.record.attempts = attempt;
        if (static_cast<double>(draw.internal_edges) > edge_cap) continue;

        VertexSet survivors = survivor_set(g, draw.sample);
        const std::size_t n_next = survivors.size();
        if (2 * n_next <= n) continue;

        // ratio condition n'/t' > nu * n/t; an edgeless survivor graph
        // passes, an empty one fails
        if (n_next == 0) continue;
        const std::size_t e_next = edges_within(g, survivors);
        if (e_next > 0) {
            const double lhs =
                static_cast<double>(n_next) * static_cast<double>(n_next) / (2.0 * static_cast<double>(e_next));
            const double rhs = nu * static_cast<double>(n) * static_cast<double>(n) /
                               (2.0 * static_cast<double>(e));
            if (!(lhs > rhs)) continue;
        }

        std::vector<Vertex> isolated;
        for (Vertex v : draw.sample) {
            bool touched = false;
            for (Vertex w : g.neighbors(v)) {
                if (draw.sample.contains(w)) {
                    touched = true;
                    break;
                }
            }
            if (!touched) isolated.push_back(v);
        }

        result.record.accepted = true;
        result.record.sample = draw.sample;
        result.record.sample_edges = draw.internal_edges;
        result.record.isolated_count = isolated.size();
        result.sample = draw.sample;
        result.survivors = std::move(survivors);
        result.isolated = VertexSet(std::move(isolated));
        return result;
    }

    result.record.attempts = params.max_attempts;
    result.record.sampling_exhausted = true;
    return result;
}

} // namespace

void AksParams::validate() const {
    if (k && *k == 0) throw InputError("k must be positive");
    if (iteration_cap && *iteration_cap == 0) throw InputError("R must be positive");
    if (!(edge_cap_factor > 0.0 && edge_cap_factor < 1.0))
        throw InputError("edge_cap_factor must lie in (0, 1)");
    if (max_attempts == 0) throw InputError("max_attempts must be positive");
    if (low_degree_factor <= 0.0) throw InputError("low_degree_factor must be positive");
}

double nu_factor(std::size_t n, const Rational& t, double c10) {
    if (n == 0) return kNegInf;
    if (t == 0) return 1.0;
    const double td = to_double(t);
    return 1.0 - 1.0 / td - c10 * std::sqrt(td / static_cast<double>(n));
}

SampleDraw sparse_sample_step(const Graph& g, const VertexSet& candidates, std::size_t k,
                              Rng& rng) {
    if (k == 0) throw InputError("sparse_sample_step: k must be positive");
    if (candidates.size() < k)
        throw DegenerateInput("candidate pool exhausted: " + std::to_string(candidates.size()) +
                              " < k=" + std::to_string(k));
    std::vector<Vertex> pool = candidates.members();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    VertexSet sample(std::move(pool));
    return {sample, edges_within(g, sample)};
}

std::optional<LemmaStep> lemma_step(const Graph& g, const AksParams& params, double nu,
                                    Rng& rng) {
    params.validate();
    const std::uint64_t k = params.k ? *params.k : derive_sample_size(g);
    if (k == 0) throw DegenerateInput("k underflow: supply explicit k");
    StepResult result = lemma_step_impl(g, k, params, nu, rng);
    if (!result.record.accepted) return std::nullopt;
    return LemmaStep{result.sample, result.survivors, result.record};
}

VertexSet turan_greedy(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));
    std::size_t remaining = n;
    std::vector<Vertex> chosen;
    while (remaining > 0) {
        std::size_t best_deg = n;
        Vertex best = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (alive[v] && deg[v] < best_deg) {
                best_deg = deg[v];
                best = static_cast<Vertex>(v);
            }
        }
        chosen.push_back(best);
        // remove the closed neighborhood
        alive[best] = 0;
        --remaining;
        for (Vertex w : g.neighbors(best)) {
            if (!alive[w]) continue;
            alive[w] = 0;
            --remaining;
            for (Vertex x : g.neighbors(w))
                if (alive[x]) --deg[x];
        }
    }
    return VertexSet(std::move(chosen));
}

VertexSet extract_isolated(const Graph& h_graph) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < h_graph.vertex_count(); ++v)
        if (h_graph.degree(static_cast<Vertex>(v)) == 0) out.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(out));
}

AksOutcome run_aks(const Graph& g, const AksParams& params) {
    params.validate();
    const std::size_t n = g.vertex_count();
    if (n == 0) throw DegenerateInput("run_aks: empty vertex set");
    const Rational t = g.average_degree();
    const double t_double = to_double(t);

    AksOutcome outcome;
    if (!(n > (1ULL << 50)))
        outcome.warnings.push_back("hypothesis n > 2^50 not met (n=" + std::to_string(n) + ")");
    if (!(t_double > std::exp2(100.0)))
        outcome.warnings.push_back("hypothesis t > 2^100 not met");
    if (n > 0 && !(t_double < std::sqrt(static_cast<double>(n)) * std::log2(static_cast<double>(n))))
        outcome.warnings.push_back("hypothesis t < sqrt(n)*log(n) not met");
    if (params.strict_hypotheses && !outcome.warnings.empty()) {
        std::string joined = "strict hypotheses unmet:";
        for (const auto& w : outcome.warnings) joined += " " + w + ";";
        throw DegenerateInput(joined);
    }

    std::uint64_t cap = 0;
    if (params.iteration_cap) {
        cap = *params.iteration_cap;
    } else {
        cap = derive_iteration_cap(t);
        if (cap == 0)
            throw DegenerateInput("degenerate average degree: t=" + t.str() +
                                  " gives iteration cap 0; supply explicit R");
    }
    const std::uint64_t k = params.k ? *params.k : derive_sample_size(g);
    if (k == 0) throw DegenerateInput("k underflow: supply explicit k");
    const double nu_floor =
        params.nu_floor ? *params.nu_floor : (t > 1 ? 1.0 - 1.0 / std::log2(t_double) : kNegInf);
    outcome.resolved_k = k;
    outcome.resolved_iteration_cap = cap;
    outcome.resolved_nu_floor = nu_floor;

    AksParams resolved = params;
    resolved.k = k;

    Rng rng(params.seed);
    VertexSet active = VertexSet::full(n);
    VertexSet previous = active;
    std::size_t prev_n = 0;
    Rational prev_t;
    std::vector<VertexSet> isolated_parts;

    for (std::size_t i = 0; i < cap; ++i) {
        const InducedGraph current = induced(g, active);
        IterationRecord record;
        record.index = i;
        record.n_i = current.graph.vertex_count();
        record.t_i = current.graph.average_degree();

        if (i >= 1) {
            const double nu_i = nu_factor(prev_n, prev_t, params.c10);
            record.nu_i = nu_i;
            if (!(nu_i > nu_floor)) {
                // line-12 path: Turan-type set in the previous survivor graph
                const InducedGraph before = induced(g, previous);
                outcome.trace.push_back(std::move(record));
                outcome.path = AksPath::TuranFallback;
                outcome.independent_set = map_to_host(turan_greedy(before.graph), before.to_host);
                outcome.completed_iterations = i;
                if (!is_independent(g, outcome.independent_set))
                    throw std::logic_error("run_aks: fallback set not independent");
                return outcome;
            }
        }

        const double nu_current =
            nu_factor(current.graph.vertex_count(), current.graph.average_degree(), params.c10);
        StepResult step = lemma_step_impl(current.graph, k, resolved, nu_current, rng);
        step.record.index = i;
        step.record.nu_i = record.nu_i;

        if (!step.record.accepted) {
            // rejection sampling gave up; take the Turan path on the current
            // survivor graph rather than aborting
            step.record.sample = VertexSet();
            outcome.trace.push_back(std::move(step.record));
            outcome.path = AksPath::TuranFallback;
            outcome.independent_set = map_to_host(turan_greedy(current.graph), current.to_host);
            outcome.completed_iterations = i;
            if (!is_independent(g, outcome.independent_set))
                throw std::logic_error("run_aks: fallback set not independent");
            return outcome;
        }

        step.record.sample = map_to_host(step.record.sample, current.to_host);
        isolated_parts.push_back(map_to_host(step.isolated, current.to_host));
        prev_n = current.graph.vertex_count();
        prev_t = current.graph.average_degree();
        previous = active;
        active = map_to_host(step.survivors, current.to_host);
        outcome.trace.push_back(std::move(step.record));
        outcome.completed_iterations = i + 1;
    }

    std::vector<Vertex> union_members;
    for (const VertexSet& part : isolated_parts)
        union_members.insert(union_members.end(), part.begin(), part.end());
    outcome.path = AksPath::SparseUnion;
    outcome.independent_set = VertexSet(std::move(union_members));
    if (!is_independent(g, outcome.independent_set))
        throw std::logic_error("run_aks: sparse-union set not independent");
    return outcome;
}

} // namespace iset
