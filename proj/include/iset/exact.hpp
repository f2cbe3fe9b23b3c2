#pragma once

#include "iset/graph.hpp"
#include "iset/numeric.hpp"

#include <cstdint>
#include <vector>

namespace iset {

// Recursion-node cap for the exact routines. Exceeding it raises
// BudgetExhausted; the counters never return a truncated number.
struct CountBudget {
    std::uint64_t node_limit = 100'000'000;
};

// Coefficients c_0..c_alpha of the independence polynomial: c_j = number of
// independent sets of size j.
struct SizeProfile {
    std::vector<BigInt> coefficients;

    BigCount total() const;
    std::size_t alpha() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

// Exact i(G) via component splitting and the branching recurrence
// i(G) = i(G - v) + i(G - N[v]) on a maximum-degree vertex.
BigCount count_independent_sets(const Graph& g, const CountBudget& budget = {},
                                unsigned workers = 1);

std::size_t independence_number(const Graph& g, const CountBudget& budget = {});

SizeProfile size_profile(const Graph& g, const CountBudget& budget = {});

// Enumerates all 2^n subsets; n <= 25 enforced. The cross-validation oracle.
BigCount brute_force_count(const Graph& g);

} // namespace iset
