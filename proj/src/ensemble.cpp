#include "iset/ensemble.hpp"

#include "iset/errors.hpp"
#include "iset/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>
#include <unordered_set>

namespace iset {

namespace {

Graph pair_sample(std::size_t n, double p, std::uint64_t seed, bool bipartite,
                  std::size_t n_left) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    if (!bipartite) {
        for (std::size_t u = 0; u + 1 < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng.unit() < p) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
        for (std::size_t u = 0; u < n_left; ++u)
            for (std::size_t v = n_left; v < n; ++v)
                if (rng.unit() < p) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edge_list(n, edges);
}

} // namespace

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
    return pair_sample(n, p, seed, false, 0);
}

Graph gen_bipartite(std::size_t n_left, std::size_t n_right, double p, std::uint64_t seed) {
    return pair_sample(n_left + n_right, p, seed, true, n_left);
}

Graph gen_triangle_free_process(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InputError("triangle-free process needs n >= 1");
    Rng rng(seed);
    std::vector<Edge> order;
    order.reserve(n * (n - 1) / 2);
    for (std::size_t u = 0; u + 1 < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            order.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[static_cast<std::size_t>(rng.below(i))]);

    std::vector<std::unordered_set<Vertex>> adj(n);
    std::vector<Edge> kept;
    for (const auto& [u, v] : order) {
        const auto& small = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        const auto& large = adj[u].size() <= adj[v].size() ? adj[v] : adj[u];
        bool closes_triangle = false;
        for (Vertex w : small) {
            if (large.contains(w)) {
                closes_triangle = true;
                break;
            }
        }
        if (closes_triangle) continue;
        adj[u].insert(v);
        adj[v].insert(u);
        kept.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, kept);
}

Graph gen_clique_union(std::size_t r, std::size_t k) {
    if (r == 0 || k == 0) throw InputError("clique union needs r, k >= 1");
    std::vector<Edge> edges;
    for (std::size_t block = 0; block < r; ++block) {
        const std::size_t base = block * k;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                edges.emplace_back(static_cast<Vertex>(base + i), static_cast<Vertex>(base + j));
    }
    return Graph::from_edge_list(r * k, edges);
}

std::vector<LemmaSample> mc_lemma_samples(const Graph& g, std::size_t k, std::size_t trials,
                                          std::uint64_t seed, unsigned workers) {
    if (k == 0) throw InputError("mc_lemma_samples: k must be positive");
    const VertexSet pool = low_degree_set(g, Rational(10) * g.average_degree());
    if (pool.size() < k)
        throw DegenerateInput("low-degree pool too small: " + std::to_string(pool.size()) +
                              " < k=" + std::to_string(k));

    const std::size_t n = g.vertex_count();
    const std::size_t e = g.edge_count();
    std::vector<LemmaSample> samples(trials);

    auto run_range = [&](std::size_t lo, std::size_t hi) {
        std::vector<char> removed(n, 0);
        std::vector<Vertex> removed_list;
        for (std::size_t trial = lo; trial < hi; ++trial) {
            Rng rng(derive_seed(seed, trial));
            const SampleDraw draw = sparse_sample_step(g, pool, k, rng);
            removed_list.clear();
            for (Vertex v : draw.sample) {
                if (!removed[v]) {
                    removed[v] = 1;
                    removed_list.push_back(v);
                }
                for (Vertex w : g.neighbors(v)) {
                    if (!removed[w]) {
                        removed[w] = 1;
                        removed_list.push_back(w);
                    }
                }
            }
            // edges leaving the removed region are counted once per removed
            // endpoint; internal ones twice
            std::uint64_t degree_sum = 0;
            std::uint64_t internal = 0;
            for (Vertex v : removed_list) {
                degree_sum += g.degree(v);
                for (Vertex w : g.neighbors(v))
                    if (w > v && removed[w]) ++internal;
            }
            samples[trial] = {n - removed_list.size(), e - degree_sum + internal,
                              draw.internal_edges};
            for (Vertex v : removed_list) removed[v] = 0;
        }
    };

    if (workers <= 1 || trials < 2 * workers) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool_threads;
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = std::min<std::size_t>(w * chunk, trials);
            const std::size_t hi = std::min<std::size_t>(lo + chunk, trials);
            if (lo < hi) pool_threads.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool_threads) th.join();
    }
    return samples;
}

namespace {

ObservableStats reduce_observable(const std::vector<LemmaSample>& samples,
                                  std::uint64_t LemmaSample::* field, double sigma) {
    // exact integer accumulation, then one rounding step: identical for any
    // worker count or summation order
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    for (const LemmaSample& s : samples) {
        const std::uint64_t x = s.*field;
        sum += x;
        sum_sq += static_cast<unsigned __int128>(x) * x;
    }
    const std::size_t t = samples.size();
    ObservableStats out;
    out.mean = static_cast<double>(static_cast<long double>(sum) / static_cast<long double>(t));
    if (t >= 2) {
        const __int128 numerator = static_cast<__int128>(sum_sq * t) - static_cast<__int128>(sum * sum);
        out.sample_variance = static_cast<double>(static_cast<long double>(numerator) /
                                                  (static_cast<long double>(t) * (t - 1)));
        if (out.sample_variance < 0) out.sample_variance = 0;
    }
    out.std_error = std::sqrt(out.sample_variance / static_cast<double>(t));
    out.confidence_radius = sigma * out.std_error;
    return out;
}

} // namespace

EnsembleStats mc_lemma_stats(const Graph& g, std::size_t k, std::size_t trials,
                             std::uint64_t seed, double sigma_multiplier, unsigned workers) {
    if (trials < 2) throw InputError("mc_lemma_stats: need at least 2 trials");
    const auto samples = mc_lemma_samples(g, k, trials, seed, workers);
    EnsembleStats stats;
    stats.trials = trials;
    stats.sigma_multiplier = sigma_multiplier;
    stats.surviving_vertices =
        reduce_observable(samples, &LemmaSample::surviving_vertices, sigma_multiplier);
    stats.surviving_edges =
        reduce_observable(samples, &LemmaSample::surviving_edges, sigma_multiplier);
    stats.sample_edges = reduce_observable(samples, &LemmaSample::sample_edges, sigma_multiplier);
    return stats;
}

Rational exact_expected_edges(const Graph& g, const VertexSet& candidates, std::size_t k) {
    if (candidates.size() < k)
        throw DegenerateInput("candidate pool smaller than k: " +
                              std::to_string(candidates.size()) + " < " + std::to_string(k));
    if (k < 2) return Rational(0);
    const std::size_t pool = candidates.size();
    const BigInt internal = edges_within(g, candidates);
    return Rational(internal * k * (k - 1), BigInt(pool) * (pool - 1));
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Consistent: return "consistent";
        case Verdict::ConsistentConditional: return "consistent (conditional)";
        case Verdict::Violated: return "violated";
        case Verdict::HypothesesUnmet: return "hypotheses-unmet";
    }
    return "?";
}

bool LemmaReport::any_violated() const {
    return std::any_of(claims.begin(), claims.end(),
                       [](const ClaimRecord& c) { return c.verdict == Verdict::Violated; });
}

namespace {

enum class Direction { LowerBound, UpperBound };

ClaimRecord make_claim(std::string id, std::optional<double> bound, double estimate,
                       double std_error, Direction dir, double sigma, bool hypotheses_ok,
                       std::string note) {
    ClaimRecord rec;
    rec.claim = std::move(id);
    rec.bound = bound;
    rec.estimate = estimate;
    rec.note = std::move(note);
    if (!hypotheses_ok || !bound) {
        rec.verdict = Verdict::HypothesesUnmet;
        return rec;
    }
    const double slack = dir == Direction::LowerBound ? estimate - *bound : *bound - estimate;
    if (std_error > 0) {
        rec.margin_sigma = slack / std_error;
        rec.verdict = *rec.margin_sigma < -sigma ? Verdict::Violated : Verdict::Consistent;
    } else {
        rec.verdict = slack < 0 ? Verdict::Violated : Verdict::Consistent;
    }
    return rec;
}

} // namespace

LemmaReport check_lemma_bounds(const Graph& g, std::size_t k, std::size_t trials,
                               std::uint64_t seed, double sigma_multiplier, double c10,
                               unsigned workers) {
    if (trials < 2) throw InputError("check_lemma_bounds: need at least 2 trials");
    const auto samples = mc_lemma_samples(g, k, trials, seed, workers);

    LemmaReport report;
    report.stats.trials = trials;
    report.stats.sigma_multiplier = sigma_multiplier;
    report.stats.surviving_vertices =
        reduce_observable(samples, &LemmaSample::surviving_vertices, sigma_multiplier);
    report.stats.surviving_edges =
        reduce_observable(samples, &LemmaSample::surviving_edges, sigma_multiplier);
    report.stats.sample_edges =
        reduce_observable(samples, &LemmaSample::sample_edges, sigma_multiplier);

    const VertexSet pool = low_degree_set(g, Rational(10) * g.average_degree());
    report.pool_size = pool.size();
    report.pool_expected_sample_edges = exact_expected_edges(g, pool, k);

    const bool triangle_free = is_triangle_free(g);
    const std::size_t n = g.vertex_count();
    const std::size_t e = g.edge_count();
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double td = g.average_degree_approx();
    // k <= n/100t, exactly: 200 k e <= n^2
    const bool small_k = BigInt(200) * k * e <= BigInt(n) * n;

    const auto& sv = report.stats.surviving_vertices;
    const auto& se = report.stats.surviving_edges;
    const auto& sh = report.stats.sample_edges;
    const double var_se_v = sv.sample_variance * std::sqrt(2.0 / (trials - 1));
    const double var_se_e = se.sample_variance * std::sqrt(2.0 / (trials - 1));
    const double var_se_h = sh.sample_variance * std::sqrt(2.0 / (trials - 1));

    {
        std::optional<double> bound;
        bool ok = triangle_free && nd > td;
        if (ok) {
            const double base = 1.0 - kd / (nd - td);
            if (base > 0)
                bound = nd * std::pow(base, td + 1.0);
            else
                ok = false;
        }
        report.claims.push_back(make_claim("expected_surviving_vertices", bound, sv.mean,
                                           sv.std_error, Direction::LowerBound, sigma_multiplier,
                                           ok, "E[n(M)] > n(1-k/(n-t))^(t+1)"));
    }
    {
        std::optional<double> bound;
        bool ok = triangle_free && nd > 20.0 * td;
        if (ok) {
            const double base = 1.0 - kd / (nd - 20.0 * td);
            if (base > 0)
                bound = nd * td / 2.0 * std::pow(base, 20.0 * td + 1.0);
            else
                ok = false;
        }
        report.claims.push_back(make_claim("expected_surviving_edges", bound, se.mean,
                                           se.std_error, Direction::LowerBound, sigma_multiplier,
                                           ok, "E[e(M)] > (nt/2)(1-k/(n-20t))^(20t+1)"));
    }
    {
        const double bound = n > 0 ? td * kd * kd / nd : 0.0;
        report.claims.push_back(make_claim("expected_sample_edges", bound, sh.mean, sh.std_error,
                                           Direction::UpperBound, sigma_multiplier, triangle_free,
                                           "E[e(H)] <= tk^2/n"));
    }
    {
        std::optional<double> bound;
        std::string note;
        bool ok = triangle_free;
        if (small_k) {
            bound = nd * td;
            note = "Var[n(M)] < nt (k <= n/100t)";
        } else {
            const double denom = nd - kd - 20.0 * td - 2.0;
            if (denom > 0) {
                bound = 2.0 * nd * kd * (td + 1.0) * (10.0 * td + 1.0) / denom;
                note = "Var[n(M)] < 2nk(t+1)(10t+1)/(n-k-20t-2)";
            } else {
                ok = false;
                note = "denominator n-k-20t-2 <= 0";
            }
        }
        report.claims.push_back(make_claim("variance_surviving_vertices", bound,
                                           sv.sample_variance, var_se_v, Direction::UpperBound,
                                           sigma_multiplier, ok, note));
    }
    {
        const std::optional<double> bound =
            small_k ? 40.0 * nd * td * td * td : 2400.0 * kd * td * td * td * td;
        const std::string note =
            small_k ? "Var[e(M)] < 40nt^3 (k <= n/100t)" : "Var[e(M)] < 2400kt^4";
        report.claims.push_back(make_claim("variance_surviving_edges", bound, se.sample_variance,
                                           var_se_e, Direction::UpperBound, sigma_multiplier,
                                           triangle_free, note));
    }
    {
        const double bound = n > 0 ? td * kd * kd * (10.0 * kd + nd) / (nd * nd) : 0.0;
        report.claims.push_back(make_claim("variance_sample_edges", bound, sh.sample_variance,
                                           var_se_h, Direction::UpperBound, sigma_multiplier,
                                           triangle_free, "Var[e(H)] <= tk^2(10k+n)/n^2"));
    }
    {
        // conditional ratio-preservation: whenever e(M) < (1+delta)E[e(M)]
        // and n(M) > (1-delta)E[n(M)], require n'/t' > nu n/t
        ClaimRecord rec;
        rec.claim = "ratio_preservation_conditional";
        const double delta = n > 0 ? 800.0 * std::sqrt(td / nd) : 0.0;
        const double nu = nu_factor(n, g.average_degree(), c10);
        std::size_t antecedent = 0;
        std::size_t violations = 0;
        const double rhs = e > 0 ? nu * nd * nd / (2.0 * static_cast<double>(e)) : 0.0;
        for (const LemmaSample& s : samples) {
            const double em = static_cast<double>(s.surviving_edges);
            const double nm = static_cast<double>(s.surviving_vertices);
            if (!(em < (1.0 + delta) * se.mean && nm > (1.0 - delta) * sv.mean)) continue;
            ++antecedent;
            bool holds;
            if (s.surviving_vertices == 0)
                holds = false;
            else if (s.surviving_edges == 0)
                holds = true;
            else
                holds = nm * nm / (2.0 * em) > rhs;
            if (!holds) ++violations;
        }
        rec.estimate = antecedent > 0 ? static_cast<double>(violations) / antecedent : 0.0;
        rec.note = "checked on " + std::to_string(antecedent) + " of " + std::to_string(trials) +
                   " trials, delta=" + std::to_string(delta);
        if (!triangle_free || antecedent == 0)
            rec.verdict = Verdict::HypothesesUnmet;
        else
            rec.verdict = violations == 0 ? Verdict::ConsistentConditional : Verdict::Violated;
        report.claims.push_back(std::move(rec));
    }
    return report;
}

std::size_t distinct_sets_experiment(const Graph& g, const AksParams& params, std::size_t runs,
                                     std::uint64_t seed) {
    if (runs == 0) throw InputError("distinct_sets_experiment: runs must be positive");
    std::set<VertexSet> seen;
    for (std::size_t run = 0; run < runs; ++run) {
        AksParams per_run = params;
        per_run.seed = derive_seed(seed, run);
        seen.insert(run_aks(g, per_run).independent_set);
    }
    return seen.size();
}

} // namespace iset
