#include "lnf/properties.hpp"

#include <cstdint>

namespace lnf {

int component_count(const Graph& g) {
  int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_forest(const Graph& g) {
  return g.size() == g.order() - component_count(g);
}

Graph local_subgraph(const Graph& g, int v) {
  return induced_subgraph(g, g.neighbors(v));
}

bool is_locally_nonforesty(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (is_forest(local_subgraph(g, v))) return false;
  return g.order() > 0;
}

bool is_locally_foresty(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (!is_forest(local_subgraph(g, v))) return false;
  return true;
}

namespace {

// Iterative DFS inside an induced subgraph, reporting whether any non-tree
// edge exists.  Works directly on the local vertex labels of `sub`.
bool has_cycle_dfs(const Graph& sub) {
  int n = sub.order();
  std::vector<int> parent(n, -2);  // -2 unvisited, -1 root
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : sub.neighbors(v)) {
        if (parent[u] == -2) {
          parent[u] = v;
          stack.push_back(u);
        } else if (u != parent[v]) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::vector<int> wheel_hubs(const Graph& g) {
  std::vector<int> hubs;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 3) continue;
    if (has_cycle_dfs(local_subgraph(g, v))) hubs.push_back(v);
  }
  return hubs;
}

}  // namespace lnf
