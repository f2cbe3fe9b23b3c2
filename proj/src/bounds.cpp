#include "iset/bounds.hpp"

#include "iset/errors.hpp"

#include <cmath>

namespace iset {

namespace {

void fill_formulas(BoundsReport& report, std::size_t n, double t) {
    report.turan_subset_log2 = static_cast<double>(n) / (t + 1.0);
    report.hypotheses.log_range = t > 1.0;
    if (report.hypotheses.log_range) {
        const double log_t = std::log2(t);
        report.prop_log2 = (1.0 / 250.0) * (static_cast<double>(n) / t) * log_t;
        report.main_log2 = (static_cast<double>(n) / (2400.0 * t)) * log_t * log_t;
    }
    report.hypotheses.prop_range = t >= 2.0 && t <= static_cast<double>(n) / 800.0;
}

} // namespace

BoundsReport evaluate_bound_formulas(std::size_t n, double t) {
    if (n == 0) throw InputError("bounds need n >= 1");
    BoundsReport report;
    report.n = n;
    report.t = t;
    report.t_exact = Rational(0);
    fill_formulas(report, n, t);
    return report;
}

BoundsReport evaluate_bounds(const Graph& g, bool with_exact, const CountBudget& budget,
                             unsigned workers) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw InputError("bounds need n >= 1");

    BoundsReport report;
    report.n = n;
    report.t_exact = g.average_degree();
    report.t = to_double(report.t_exact);
    report.max_degree = g.max_degree();
    fill_formulas(report, n, report.t);

    report.hypotheses.triangle_free = is_triangle_free(g);
    report.neighborhood_log2 = static_cast<double>(report.max_degree);
    if (report.main_log2)
        report.combined_log2 = std::max(report.neighborhood_log2, *report.main_log2);

    if (with_exact) {
        try {
            const BigCount count = count_independent_sets(g, budget, workers);
            const std::size_t alpha = independence_number(g, budget);
            report.alpha = alpha;
            report.exact_count = count.str();
            report.exact_log2 = count.log2_view();
            report.hypotheses.alpha_quarter = 4 * alpha <= n;
            BigInt sum = 0;
            for (std::size_t i = 0; i <= alpha; ++i) sum += binomial(n, i);
            report.upper_sum_log2 = log2_of(sum);
        } catch (const BudgetExhausted&) {
            report.budget_exhausted = true;
        }
    }
    return report;
}

SandwichVerdict verify_sandwich(const Graph& g, const CountBudget& budget) {
    const std::size_t n = g.vertex_count();
    const BigCount count = count_independent_sets(g, budget);
    const std::size_t alpha = independence_number(g, budget);

    SandwichVerdict verdict;
    verdict.count = count.str();
    verdict.alpha = alpha;
    // ceil(n/(t+1)) = ceil(n^2/(n+2e)), exact
    verdict.turan_floor =
        n == 0 ? BigInt(0) : ceil_div(BigInt(n) * n, BigInt(n) + 2 * g.edge_count());

    verdict.count_ge_pow_alpha = count.value >= (BigInt(1) << alpha);
    verdict.alpha_ge_turan = BigInt(alpha) >= verdict.turan_floor;
    BigInt sum = 0;
    for (std::size_t i = 0; i <= alpha; ++i) sum += binomial(n, i);
    verdict.count_le_binom_sum = count.value <= sum;
    return verdict;
}

} // namespace iset
