#pragma once

#include <string>
#include <string_view>

#include "lnf/graph.hpp"

namespace lnf {

// graph6 text format: header encodes the order, then the upper triangle of
// the adjacency matrix in column-major order, six bits per printable char
// (offset 63).  Orders above 62 use the '~'-prefixed three-char header.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

// Debug format: first line "n m", then one "u v" line per edge with u < v,
// ascending lexicographic.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace lnf
