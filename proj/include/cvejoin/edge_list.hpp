#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvejoin/graph.hpp"

namespace cvejoin {

// Text edge-list format (0-based labels):
//   - first significant line: "n m"
//   - next m significant lines: "u v"
//   - '#' starts a comment line; blank lines are ignored
// The declared m must match the number of edge lines exactly.
Graph parse_edge_list(std::istream& in, const std::string& source_name = "<stream>");

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& header_comments = {});

// Named graphs for spots where a file path is expected: "c<N>" (cycle),
// "k<N>" (complete), "k<P>,<Q>" (complete bipartite), "k33" (alias for
// "k3,3"), "petersen".
std::optional<Graph> builtin_graph(const std::string& name);

// Either a path to an edge-list file or "builtin:<name>".
Graph load_graph(const std::string& spec);

} // namespace cvejoin
