#pragma once

#include <map>
#include <vector>

#include "lnf/graph.hpp"

namespace lnf {

// Exact vertex connectivity.  Complete graphs give order-1; the empty graph
// is rejected.  Computed with unit-capacity vertex-split max-flow between a
// minimum-degree vertex and its non-neighbors, plus all non-adjacent pairs
// inside that vertex's neighborhood.
int vertex_connectivity(const Graph& g);

// kappa(g) >= k and |g| > k.  Short-circuits: each flow stops once k paths
// are found, and a minimum degree below k fails immediately.
bool is_k_connected(const Graph& g, int k);

struct BlockDecomposition {
  // Each block as its ascending vertex set; bridges appear as order-2 blocks.
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;           // ascending
  std::map<int, int> block_order_histogram;  // block order -> count
};

// Requires a connected graph of order >= 1.  An order-1 graph has no blocks.
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace lnf
