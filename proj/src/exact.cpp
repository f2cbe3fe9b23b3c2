#include "iset/exact.hpp"

#include "iset/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace iset {

namespace {

// Bitset over the host graph's vertices.
class ActiveMask {
  public:
    explicit ActiveMask(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(Vertex v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void clear(Vertex v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }
    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }

  private:
    std::vector<std::uint64_t> words_;
};

struct NodeCounter {
    std::uint64_t limit;
    std::uint64_t used = 0;

    void tick() {
        if (++used > limit)
            throw BudgetExhausted("node budget exhausted after " + std::to_string(limit) +
                                  " recursion nodes");
    }
};

// Shared recursion skeleton: split the active vertices into components, fold
// the per-component values with `combine`, branch inside a component on a
// maximum-degree vertex (ties to the lowest index).
template <typename Value, typename Leaf1, typename Leaf2, typename Branch, typename Combine>
class ComponentRecursion {
  public:
    ComponentRecursion(const Graph& g, NodeCounter& nodes, Value identity, Leaf1 leaf1,
                       Leaf2 leaf2, Branch branch, Combine combine)
        : g_(g), nodes_(nodes), identity_(std::move(identity)), leaf1_(leaf1), leaf2_(leaf2),
          branch_(branch), combine_(combine) {}

    Value over(const std::vector<Vertex>& verts, ActiveMask& active) {
        Value result = identity_;
        std::vector<char> seen(verts.size(), 0);
        // local index lookup for the BFS seen-array
        // (verts is sorted, so binary search suffices)
        std::vector<Vertex> stack;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (seen[i]) continue;
            std::vector<Vertex> comp;
            stack.push_back(verts[i]);
            seen[i] = 1;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (Vertex w : g_.neighbors(v)) {
                    if (!active.test(w)) continue;
                    const auto it = std::lower_bound(verts.begin(), verts.end(), w);
                    const std::size_t j = static_cast<std::size_t>(it - verts.begin());
                    if (!seen[j]) {
                        seen[j] = 1;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            result = combine_(std::move(result), component(comp, active));
        }
        return result;
    }

    Value component(const std::vector<Vertex>& comp, ActiveMask& active) {
        nodes_.tick();
        if (comp.size() == 1) return leaf1_();
        if (comp.size() == 2) return leaf2_(); // connected, so a single edge

        Vertex pivot = comp[0];
        std::size_t best = 0;
        for (Vertex v : comp) {
            std::size_t d = 0;
            for (Vertex w : g_.neighbors(v))
                if (active.test(w)) ++d;
            if (d > best) {
                best = d;
                pivot = v;
            }
        }

        // branch A: drop the pivot
        active.clear(pivot);
        std::vector<Vertex> rest;
        rest.reserve(comp.size() - 1);
        for (Vertex v : comp)
            if (v != pivot) rest.push_back(v);
        Value without_pivot = over(rest, active);

        // branch B: drop the pivot's closed neighborhood
        std::vector<Vertex> dropped;
        for (Vertex w : g_.neighbors(pivot)) {
            if (active.test(w)) {
                active.clear(w);
                dropped.push_back(w);
            }
        }
        std::vector<Vertex> remaining;
        remaining.reserve(comp.size());
        for (Vertex v : comp)
            if (active.test(v)) remaining.push_back(v);
        Value with_pivot = over(remaining, active);

        for (Vertex w : dropped) active.set(w);
        active.set(pivot);
        return branch_(std::move(without_pivot), std::move(with_pivot));
    }

  private:
    const Graph& g_;
    NodeCounter& nodes_;
    Value identity_;
    Leaf1 leaf1_;
    Leaf2 leaf2_;
    Branch branch_;
    Combine combine_;
};

BigInt count_verts(const Graph& g, const std::vector<Vertex>& verts, NodeCounter& nodes) {
    ActiveMask active(g.vertex_count());
    for (Vertex v : verts) active.set(v);
    auto leaf1 = [] { return BigInt(2); };
    auto leaf2 = [] { return BigInt(3); };
    auto branch = [](BigInt a, BigInt b) { return a + b; };
    auto combine = [](BigInt a, BigInt b) { return a * b; };
    ComponentRecursion<BigInt, decltype(leaf1), decltype(leaf2), decltype(branch),
                       decltype(combine)>
        rec(g, nodes, BigInt(1), leaf1, leaf2, branch, combine);
    return rec.over(verts, active);
}

std::size_t alpha_verts(const Graph& g, const std::vector<Vertex>& verts, NodeCounter& nodes) {
    ActiveMask active(g.vertex_count());
    for (Vertex v : verts) active.set(v);
    auto leaf1 = [] { return std::size_t{1}; };
    auto leaf2 = [] { return std::size_t{1}; };
    // branch B's value gains the pivot itself
    auto branch = [](std::size_t a, std::size_t b) { return std::max(a, b + 1); };
    auto combine = [](std::size_t a, std::size_t b) { return a + b; };
    ComponentRecursion<std::size_t, decltype(leaf1), decltype(leaf2), decltype(branch),
                       decltype(combine)>
        rec(g, nodes, std::size_t{0}, leaf1, leaf2, branch, combine);
    return rec.over(verts, active);
}

using Poly = std::vector<BigInt>; // coefficient j = sets of size j

Poly poly_add_shifted(Poly a, const Poly& b) {
    // a + x*b
    if (a.size() < b.size() + 1) a.resize(b.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < b.size(); ++j) a[j + 1] += b[j];
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly profile_verts(const Graph& g, const std::vector<Vertex>& verts, NodeCounter& nodes) {
    ActiveMask active(g.vertex_count());
    for (Vertex v : verts) active.set(v);
    auto leaf1 = [] { return Poly{BigInt(1), BigInt(1)}; };
    auto leaf2 = [] { return Poly{BigInt(1), BigInt(2)}; };
    auto branch = [](Poly a, Poly b) { return poly_add_shifted(std::move(a), b); };
    auto combine = [](Poly a, Poly b) { return poly_mul(a, b); };
    ComponentRecursion<Poly, decltype(leaf1), decltype(leaf2), decltype(branch),
                       decltype(combine)>
        rec(g, nodes, Poly{BigInt(1)}, leaf1, leaf2, branch, combine);
    return rec.over(verts, active);
}

std::vector<std::vector<Vertex>> top_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    for (const VertexSet& c : connected_components(g)) out.push_back(c.members());
    return out;
}

} // namespace

BigCount SizeProfile::total() const {
    BigInt sum = 0;
    for (const BigInt& c : coefficients) sum += c;
    return BigCount(sum);
}

BigCount count_independent_sets(const Graph& g, const CountBudget& budget, unsigned workers) {
    const auto components = top_components(g);
    if (workers <= 1 || components.size() < 2) {
        NodeCounter nodes{budget.node_limit};
        BigInt result = 1;
        for (const auto& comp : components) result *= count_verts(g, comp, nodes);
        return BigCount(result);
    }

    // Per-component counts are exact integers, so the product below is
    // bit-identical to the sequential pass for any worker count. Each worker
    // carries its own node counter; the combined total enforces the budget.
    std::vector<BigInt> partial(components.size());
    std::vector<std::uint64_t> used(components.size(), 0);
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> exhausted{false};
    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= components.size() || exhausted.load()) return;
            NodeCounter nodes{budget.node_limit};
            try {
                partial[i] = count_verts(g, components[i], nodes);
            } catch (const BudgetExhausted&) {
                exhausted.store(true);
                return;
            }
            used[i] = nodes.used;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    std::uint64_t total_nodes = 0;
    for (std::uint64_t u : used) total_nodes += u;
    if (exhausted.load() || total_nodes > budget.node_limit)
        throw BudgetExhausted("node budget exhausted after " + std::to_string(budget.node_limit) +
                              " recursion nodes");
    BigInt result = 1;
    for (const BigInt& p : partial) result *= p;
    return BigCount(result);
}

std::size_t independence_number(const Graph& g, const CountBudget& budget) {
    NodeCounter nodes{budget.node_limit};
    std::size_t alpha = 0;
    for (const auto& comp : top_components(g)) alpha += alpha_verts(g, comp, nodes);
    return alpha;
}

SizeProfile size_profile(const Graph& g, const CountBudget& budget) {
    NodeCounter nodes{budget.node_limit};
    Poly result{BigInt(1)};
    for (const auto& comp : top_components(g)) result = poly_mul(result, profile_verts(g, comp, nodes));
    return SizeProfile{std::move(result)};
}

BigCount brute_force_count(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 25) throw InputError("brute_force_count: n=" + std::to_string(n) + " exceeds cap 25");
    std::vector<std::uint32_t> mask(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) mask[v] |= 1u << w;

    const std::size_t total = std::size_t{1} << n;
    std::vector<char> independent(total, 0);
    independent[0] = 1;
    std::uint64_t count = 1;
    for (std::size_t s = 1; s < total; ++s) {
        const unsigned v = static_cast<unsigned>(std::countr_zero(s));
        const std::size_t rest = s & (s - 1);
        independent[s] = independent[rest] && (mask[v] & rest) == 0;
        count += independent[s];
    }
    return BigCount(BigInt(count));
}

} // namespace iset
