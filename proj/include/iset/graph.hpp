#pragma once

#include "iset/numeric.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace iset {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Subset of the vertices of a host graph. Stored sorted and deduplicated.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    static VertexSet full(std::size_t n);

    bool contains(Vertex v) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        return a.members_ < b.members_;
    }

  private:
    std::vector<Vertex> members_; // sorted ascending, unique
};

// Immutable simple undirected graph on vertices 0..n-1. Adjacency lists are
// sorted; no self-loops; symmetric by construction.
class Graph {
  public:
    Graph() = default;

    // Rejects endpoints out of range and self-loops; duplicate pairs collapse.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    // 2e/n, exact. Zero on the empty vertex set.
    Rational average_degree() const;
    double average_degree_approx() const { return to_double(average_degree()); }

    std::vector<Edge> edges() const;

  private:
    std::vector<std::size_t> offsets_; // n+1 entries, CSR layout
    std::vector<Vertex> adjacency_;
    std::size_t edge_count_ = 0;
};

bool is_triangle_free(const Graph& g);

// Induced subgraph plus the map from its dense labels back to the host's.
struct InducedGraph {
    Graph graph;
    std::vector<Vertex> to_host; // local index -> host vertex, ascending
};
InducedGraph induced(const Graph& g, const VertexSet& s);

// V(g) \ (h ∪ N(h)): the vertices outside h with no neighbor in h.
VertexSet survivor_set(const Graph& g, const VertexSet& h);

// {v : deg(v) <= cap}, with an exact rational threshold.
VertexSet low_degree_set(const Graph& g, const Rational& cap);

// Maximal connected pieces, ordered by smallest contained index.
std::vector<VertexSet> connected_components(const Graph& g);

// Edges of g with both endpoints in s.
std::size_t edges_within(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

} // namespace iset
