#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "lnf/graph.hpp"

namespace lnf {

// Fixed-width adjacency rows for the exhaustive search paths.  Order is
// capped at 16 so a row fits one word and copies are trivial.
struct SmallGraph {
  static constexpr int max_order = 16;

  int n = 0;
  std::array<std::uint16_t, max_order> adj{};

  bool adjacent(int u, int v) const { return adj[u] >> v & 1; }
  void add_edge(int u, int v) {
    adj[u] |= static_cast<std::uint16_t>(1u << v);
    adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
  int degree(int v) const { return std::popcount(adj[v]); }
  int size() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
  }

  static SmallGraph from_graph(const Graph& g);
  Graph to_graph() const;
};

// Canonical labelling of a SmallGraph.  `enc` packs the upper triangle of
// the relabelled adjacency matrix, column by column, most significant bit
// first; isomorphic graphs produce equal `enc`.  `order[i]` is the original
// vertex placed at position i.  `orbit[v]` is the smallest vertex in v's
// automorphism orbit; the search walks every optimal leaf, so the orbits
// are those of the full automorphism group.
struct CanonicalForm {
  std::array<std::uint64_t, 2> enc{};
  std::array<std::uint8_t, SmallGraph::max_order> order{};
  std::array<std::uint8_t, SmallGraph::max_order> orbit{};
};

CanonicalForm canonical_form(const SmallGraph& g);

// Copy of g with vertex cf.order[i] relabelled to i.
SmallGraph canonical_relabel(const SmallGraph& g, const CanonicalForm& cf);

// Canonical relabelling of a graph of order <= 16; a fixed point of this
// map is the class representative.
Graph canonical_relabel(const Graph& g);

}  // namespace lnf
