#include "iset/graph.hpp"

#include "iset/errors.hpp"

#include <algorithm>
#include <string>

namespace iset {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(std::size_t n) {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    VertexSet s;
    s.members_ = std::move(all);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw InputError("self-loop rejected: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    Graph g;
    g.edge_count_ = normalized.size();
    std::vector<std::size_t> deg(n, 0);
    for (const auto& [u, v] : normalized) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adjacency_.resize(2 * normalized.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : normalized) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    return g;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Rational Graph::average_degree() const {
    const std::size_t n = vertex_count();
    if (n == 0) return Rational(0);
    return Rational(2 * static_cast<unsigned long long>(edge_count_), n);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(static_cast<Vertex>(u)))
            if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

bool is_triangle_free(const Graph& g) {
    // For every edge, look for a common neighbor by merging sorted lists.
    const std::size_t n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        const auto nu = g.neighbors(static_cast<Vertex>(u));
        for (Vertex v : nu) {
            if (v <= u) continue;
            const auto nv = g.neighbors(v);
            auto a = nu.begin();
            auto b = nv.begin();
            while (a != nu.end() && b != nv.end()) {
                if (*a == *b) return false;
                if (*a < *b)
                    ++a;
                else
                    ++b;
            }
        }
    }
    return true;
}

InducedGraph induced(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> local(n, static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Vertex host = s.members()[i];
        if (host >= n) throw InputError("induced: member " + std::to_string(host) + " out of range");
        local[host] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Vertex host : s) {
        for (Vertex w : g.neighbors(host)) {
            if (w > host && local[w] != static_cast<Vertex>(-1))
                edges.emplace_back(local[host], local[w]);
        }
    }
    return {Graph::from_edge_list(s.size(), edges), s.members()};
}

VertexSet survivor_set(const Graph& g, const VertexSet& h) {
    const std::size_t n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (Vertex v : h) {
        if (v >= n) throw InputError("survivor_set: member out of range");
        removed[v] = 1;
        for (Vertex w : g.neighbors(v)) removed[w] = 1;
    }
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < n; ++v)
        if (!removed[v]) out.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(out));
}

VertexSet low_degree_set(const Graph& g, const Rational& cap) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (Rational(g.degree(static_cast<Vertex>(v))) <= cap) out.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(out));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> components;
    std::vector<Vertex> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<Vertex> comp;
        stack.push_back(static_cast<Vertex>(start));
        seen[start] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        components.emplace_back(std::move(comp));
    }
    return components;
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
    std::size_t count = 0;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (w > v && s.contains(w)) ++count;
    return count;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    return edges_within(g, s) == 0;
}

} // namespace iset
