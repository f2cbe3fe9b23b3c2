#pragma once

#include "iset/exact.hpp"
#include "iset/graph.hpp"
#include "iset/numeric.hpp"

#include <optional>
#include <string>

namespace iset {

struct BoundsHypotheses {
    bool triangle_free = false;       // needed by the main and neighborhood bounds
    bool log_range = false;           // t > 1, so the log-bearing formulas apply
    bool prop_range = false;          // 2 <= t <= n/800
    std::optional<bool> alpha_quarter; // alpha <= n/4, when alpha is known
};

// Every closed-form bound, in log2 units.
struct BoundsReport {
    std::size_t n = 0;
    Rational t_exact;
    double t = 0.0;
    std::size_t max_degree = 0;

    std::optional<std::size_t> alpha;
    std::optional<std::string> exact_count;
    std::optional<double> exact_log2;

    double turan_subset_log2 = 0.0;           // n/(t+1)
    std::optional<double> prop_log2;          // (1/250)(n/t) log2 t
    std::optional<double> main_log2;          // (n/2400t) (log2 t)^2
    double neighborhood_log2 = 0.0;           // max degree
    std::optional<double> combined_log2;      // max(neighborhood, main)
    std::optional<double> upper_sum_log2;     // log2 sum_{i<=alpha} C(n,i)

    BoundsHypotheses hypotheses;
    bool budget_exhausted = false; // exact part requested but over budget
};

BoundsReport evaluate_bounds(const Graph& g, bool with_exact, const CountBudget& budget = {},
                             unsigned workers = 1);

// Formula-only evaluation for hypothetical (n, t) pairs; no graph involved,
// so the degree and counting fields stay empty.
BoundsReport evaluate_bound_formulas(std::size_t n, double t);

struct SandwichVerdict {
    bool count_ge_pow_alpha = false;  // i(G) >= 2^alpha
    bool alpha_ge_turan = false;      // alpha >= ceil(n/(t+1))
    bool count_le_binom_sum = false;  // i(G) <= sum_{i<=alpha} C(n,i)
    std::string count;
    std::size_t alpha = 0;
    BigInt turan_floor;

    bool all() const { return count_ge_pow_alpha && alpha_ge_turan && count_le_binom_sum; }
};

// Exact check of the chain 2^alpha <= i(G) <= sum_{i<=alpha} C(n,i) plus the
// Turan lower bound on alpha.
SandwichVerdict verify_sandwich(const Graph& g, const CountBudget& budget = {});

} // namespace iset
