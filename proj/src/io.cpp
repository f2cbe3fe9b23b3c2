#include "iset/io.hpp"

#include "iset/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace iset {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

ParsedGraph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw InputError("edge list: missing header line 'n m'");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw InputError("edge list: malformed header line: '" + line + "'");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw InputError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || u < 0 || v < 0)
            throw InputError("edge list: malformed edge line: '" + line + "'");
        if (u == v)
            throw InputError("edge list: self-loop rejected: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
        if (u >= n || v >= n)
            throw InputError("edge list: endpoint out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    std::vector<Edge> normalized(edges);
    for (auto& [u, v] : normalized)
        if (u > v) std::swap(u, v);
    std::sort(normalized.begin(), normalized.end());
    const std::size_t unique_count =
        static_cast<std::size_t>(std::unique(normalized.begin(), normalized.end()) - normalized.begin());

    ParsedGraph result;
    if (unique_count != edges.size())
        result.warnings.push_back("edge list: " + std::to_string(edges.size() - unique_count) +
                                  " duplicate edge(s) deduplicated");
    result.graph = Graph::from_edge_list(static_cast<std::size_t>(n), edges);
    return result;
}

ParsedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    write_edge_list(g, out);
}

} // namespace iset
