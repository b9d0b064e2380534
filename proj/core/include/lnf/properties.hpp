#pragma once

#include <vector>

#include "lnf/graph.hpp"

namespace lnf {

int component_count(const Graph& g);
bool is_connected(const Graph& g);  // vacuously true on the empty graph

// Acyclic, not necessarily connected.
bool is_forest(const Graph& g);

// Subgraph induced by the open neighborhood of v, relabelled as in
// induced_subgraph.
Graph local_subgraph(const Graph& g, int v);

// Every vertex has a cycle in the subgraph induced by its neighborhood.
bool is_locally_nonforesty(const Graph& g);

// Every such induced subgraph is a forest.  Not the negation of the above:
// mixed graphs fail both.
bool is_locally_foresty(const Graph& g);

// Vertices whose neighborhood induces a cycle through adjacent vertices,
// i.e. hubs of wheel subgraphs.  Found by a depth-first cycle search, not
// by the forest edge-count criterion, so the two predicates can be checked
// against each other.
std::vector<int> wheel_hubs(const Graph& g);

}  // namespace lnf
