#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// enumerate subsets directly and never touch the branching counter.

#include "iset/graph.hpp"
#include "iset/numeric.hpp"

#include <cstdint>
#include <vector>

namespace fixtures {

inline iset::Graph cycle(std::size_t n) {
    std::vector<iset::Edge> edges;
    for (std::size_t v = 0; v < n; ++v)
        edges.emplace_back(static_cast<iset::Vertex>(v), static_cast<iset::Vertex>((v + 1) % n));
    return iset::Graph::from_edge_list(n, edges);
}

inline iset::Graph path(std::size_t n) {
    std::vector<iset::Edge> edges;
    for (std::size_t v = 0; v + 1 < n; ++v)
        edges.emplace_back(static_cast<iset::Vertex>(v), static_cast<iset::Vertex>(v + 1));
    return iset::Graph::from_edge_list(n, edges);
}

inline iset::Graph complete(std::size_t n) {
    std::vector<iset::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            edges.emplace_back(static_cast<iset::Vertex>(u), static_cast<iset::Vertex>(v));
    return iset::Graph::from_edge_list(n, edges);
}

inline iset::Graph empty(std::size_t n) {
    return iset::Graph::from_edge_list(n, {});
}

inline iset::Graph star(std::size_t leaves) {
    std::vector<iset::Edge> edges;
    for (std::size_t v = 1; v <= leaves; ++v)
        edges.emplace_back(0, static_cast<iset::Vertex>(v));
    return iset::Graph::from_edge_list(leaves + 1, edges);
}

// outer 5-cycle, inner pentagram, spokes
inline iset::Graph petersen() {
    std::vector<iset::Edge> edges;
    for (iset::Vertex v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);
        edges.emplace_back(v, 5 + v);
    }
    return iset::Graph::from_edge_list(10, edges);
}

// Subset-enumeration oracles (n <= ~22).
inline std::vector<std::uint32_t> adjacency_masks(const iset::Graph& g) {
    std::vector<std::uint32_t> mask(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (iset::Vertex w : g.neighbors(static_cast<iset::Vertex>(v)))
            mask[v] |= 1u << w;
    return mask;
}

inline bool subset_independent(const std::vector<std::uint32_t>& mask, std::uint32_t subset) {
    for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
        const unsigned v = static_cast<unsigned>(__builtin_ctz(rest));
        if (mask[v] & subset) return false;
    }
    return true;
}

inline std::uint64_t oracle_count(const iset::Graph& g) {
    const auto mask = adjacency_masks(g);
    const std::uint32_t total = 1u << g.vertex_count();
    std::uint64_t count = 0;
    for (std::uint32_t s = 0; s < total; ++s)
        if (subset_independent(mask, s)) ++count;
    return count;
}

inline std::size_t oracle_alpha(const iset::Graph& g) {
    const auto mask = adjacency_masks(g);
    const std::uint32_t total = 1u << g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < total; ++s)
        if (subset_independent(mask, s))
            best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
    return best;
}

inline std::vector<std::uint64_t> oracle_profile(const iset::Graph& g) {
    const auto mask = adjacency_masks(g);
    const std::uint32_t total = 1u << g.vertex_count();
    std::vector<std::uint64_t> coeff(g.vertex_count() + 1, 0);
    for (std::uint32_t s = 0; s < total; ++s)
        if (subset_independent(mask, s)) ++coeff[static_cast<std::size_t>(__builtin_popcount(s))];
    while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
    return coeff;
}

inline bool oracle_triangle_free(const iset::Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (g.adjacent(static_cast<iset::Vertex>(a), static_cast<iset::Vertex>(b)) &&
                    g.adjacent(static_cast<iset::Vertex>(b), static_cast<iset::Vertex>(c)) &&
                    g.adjacent(static_cast<iset::Vertex>(a), static_cast<iset::Vertex>(c)))
                    return false;
    return true;
}

// disjoint union with g2's labels shifted past g1's
inline iset::Graph disjoint_union(const iset::Graph& g1, const iset::Graph& g2) {
    std::vector<iset::Edge> edges = g1.edges();
    const auto shift = static_cast<iset::Vertex>(g1.vertex_count());
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
    return iset::Graph::from_edge_list(g1.vertex_count() + g2.vertex_count(), edges);
}

} // namespace fixtures
