#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace oracle {

using lnf::Graph;

std::vector<Graph> all_labelled_graphs(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("n must be in [0, 6]");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

// Extends a partial vertex map a -> b one vertex at a time, checking each
// new assignment against every previously mapped vertex.
bool extend_map(const Graph& a, const Graph& b, std::vector<int>& map,
                std::vector<bool>& used, int next) {
  int n = a.order();
  if (next == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || a.degree(next) != b.degree(w)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      ok = a.adjacent(prev, next) == b.adjacent(map[prev], w);
    if (!ok) continue;
    map[next] = w;
    used[w] = true;
    if (extend_map(a, b, map, used, next + 1)) return true;
    used[w] = false;
  }
  return false;
}

std::vector<int> triangle_counts(const Graph& g) {
  int n = g.order();
  std::vector<int> t(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (int w = v + 1; w < n; ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) {
          ++t[u];
          ++t[v];
          ++t[w];
        }
    }
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  if (triangle_counts(a) != triangle_counts(b)) return false;
  std::vector<int> map(a.order());
  std::vector<bool> used(a.order(), false);
  return extend_map(a, b, map, used, 0);
}

std::vector<Graph> isomorphism_classes(int n) {
  std::vector<Graph> reps;
  for (const Graph& g : all_labelled_graphs(n)) {
    bool fresh = true;
    for (const Graph& rep : reps)
      if (isomorphic(g, rep)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(g);
  }
  return reps;
}

std::vector<int> automorphism_orbits(const Graph& g) {
  int n = g.order();
  if (n > 8) throw std::invalid_argument("order must be at most 8");
  std::vector<int> orbit(n);
  std::iota(orbit.begin(), orbit.end(), 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool automorphism = true;
    for (int u = 0; u < n && automorphism; ++u)
      for (int v = u + 1; v < n && automorphism; ++v)
        automorphism = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
    if (automorphism)
      for (int v = 0; v < n; ++v) {
        // Union by smallest representative, chasing both chains to roots.
        int a = v, b = perm[v];
        while (orbit[a] != a) a = orbit[a];
        while (orbit[b] != b) b = orbit[b];
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int v = 0; v < n; ++v) {
    int root = v;
    while (orbit[root] != root) root = orbit[root];
    orbit[v] = root;
  }
  return orbit;
}

namespace {

bool connected_after_deletion(const Graph& g, std::uint32_t deleted) {
  int n = g.order();
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!(deleted >> v & 1)) {
      start = v;
      break;
    }
  if (start < 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;
  frontier.push(start);
  seen[start] = true;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v))
      if (!seen[w] && !(deleted >> w & 1)) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
  }
  int remaining = n - std::popcount(deleted);
  return reached == remaining;
}

}  // namespace

int min_vertex_cut(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("cut undefined for the empty graph");
  if (n > 16) throw std::invalid_argument("order must be at most 16");
  bool complete = g.size() == n * (n - 1) / 2;
  if (complete) return n - 1;
  for (int cut = 0; cut < n - 1; ++cut)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (std::popcount(mask) == cut && !connected_after_deletion(g, mask))
        return cut;
  return n - 1;
}

bool has_cycle(const Graph& g) {
  std::vector<int> root(g.order());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) return true;
    root[a] = b;
  }
  return false;
}

namespace {

struct FourRegularSearch {
  int n;
  std::vector<std::vector<bool>> adj;
  std::vector<int> deg;
  std::vector<Graph> reps;

  explicit FourRegularSearch(int order)
      : n(order), adj(order, std::vector<bool>(order, false)), deg(order, 0) {}

  void record() {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[u][v]) g.add_edge(u, v);
    if (!connected_after_deletion(g, 0)) return;
    for (const Graph& rep : reps)
      if (isomorphic(g, rep)) return;
    reps.push_back(std::move(g));
  }

  // Decides pairs (u,v), u < v, in lexicographic order; pairs touching
  // vertex 0 are already fixed by the N(0) = {1,2,3,4} normalization.
  void decide(int u, int v) {
    if (u == n - 1) {
      if (deg[u] == 4) record();
      return;
    }
    if (v == n) {
      if (deg[u] == 4) decide(u + 1, u + 2);
      return;
    }
    int remaining_partners = n - v;
    if (4 - deg[u] > remaining_partners) return;
    if (deg[u] < 4 && deg[v] < 4) {
      adj[u][v] = adj[v][u] = true;
      ++deg[u];
      ++deg[v];
      decide(u, v + 1);
      adj[u][v] = adj[v][u] = false;
      --deg[u];
      --deg[v];
    }
    decide(u, v + 1);
  }
};

}  // namespace

std::vector<Graph> four_regular_classes(int n) {
  if (n < 5 || n > 9) throw std::invalid_argument("n must be in [5, 9]");
  FourRegularSearch search(n);
  for (int v = 1; v <= 4; ++v) {
    search.adj[0][v] = search.adj[v][0] = true;
    ++search.deg[0];
    ++search.deg[v];
  }
  search.decide(1, 2);
  return std::move(search.reps);
}

}  // namespace oracle
