#pragma once

#include "iset/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace iset {

// Shared edge-list text format: first non-comment line "n m", then m lines
// "u v" (0-based). Lines starting with '#' are ignored. Duplicate edges are
// deduplicated with a warning; self-loops are an error.
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

ParsedGraph read_edge_list(std::istream& in);
ParsedGraph load_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);

} // namespace iset
