#include "lnf/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "lnf/properties.hpp"

namespace lnf {

namespace {

// Residual network for unit-capacity flows.  Arc i and i^1 are a pair.
struct FlowNet {
  std::vector<std::pair<int, int>> arcs;  // to, residual capacity
  std::vector<std::vector<int>> adj;

  explicit FlowNet(int nodes) : adj(nodes) {}

  void add_arc(int from, int to) {
    adj[from].push_back(static_cast<int>(arcs.size()));
    arcs.emplace_back(to, 1);
    adj[to].push_back(static_cast<int>(arcs.size()));
    arcs.emplace_back(from, 0);
  }
};

// Maximum number of internally disjoint s-t paths, but stops at `limit`.
// Vertex capacities come from splitting each vertex into an in and an out
// node; s and t are not split.
int flow_between(const Graph& g, int s, int t, int limit) {
  if (limit <= 0) return 0;
  int n = g.order();
  FlowNet net(2 * n);
  for (int v = 0; v < n; ++v)
    if (v != s && v != t) net.add_arc(2 * v, 2 * v + 1);
  for (auto [u, v] : g.edges()) {
    int uo = (u == s || u == t) ? 2 * u : 2 * u + 1;
    int vo = (v == s || v == t) ? 2 * v : 2 * v + 1;
    net.add_arc(uo, 2 * v);
    net.add_arc(vo, 2 * u);
  }
  int source = 2 * s, sink = 2 * t;
  int flow = 0;
  std::vector<int> prev(2 * n);
  std::vector<int> queue;
  while (flow < limit) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[source] = -2;
    queue.assign(1, source);
    for (std::size_t qi = 0; qi < queue.size() && prev[sink] == -1; ++qi) {
      int v = queue[qi];
      for (int a : net.adj[v]) {
        auto [to, cap] = net.arcs[a];
        if (cap > 0 && prev[to] == -1) {
          prev[to] = a;
          queue.push_back(to);
        }
      }
    }
    if (prev[sink] == -1) break;
    for (int v = sink; v != source;) {
      int a = prev[v];
      --net.arcs[a].second;
      ++net.arcs[a ^ 1].second;
      v = net.arcs[a ^ 1].first;
    }
    ++flow;
  }
  return flow;
}

bool is_complete(const Graph& g) {
  long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

// Candidate pairs whose pairwise flows realize kappa: a fixed minimum-degree
// vertex against every non-neighbor, and every non-adjacent pair inside its
// neighborhood.  A minimum cut either avoids v0 (first group) or contains it
// (second group).
template <typename Pair>
void for_each_candidate_pair(const Graph& g, Pair&& fn) {
  int v0 = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(v0)) v0 = v;
  for (int u = 0; u < g.order(); ++u)
    if (u != v0 && !g.adjacent(v0, u))
      if (!fn(v0, u)) return;
  std::vector<int> nbrs = g.neighbors(v0);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j]))
        if (!fn(nbrs[i], nbrs[j])) return;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument("vertex_connectivity: empty graph");
  if (is_complete(g)) return g.order() - 1;
  int best = g.min_degree();
  for_each_candidate_pair(g, [&](int s, int t) {
    best = std::min(best, flow_between(g, s, t, best));
    return best > 0;
  });
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("is_k_connected: negative k");
  if (g.order() <= k) return false;
  if (k == 0) return true;
  if (is_complete(g)) return true;
  if (g.min_degree() < k) return false;
  if (k == 1) return is_connected(g);
  bool ok = true;
  for_each_candidate_pair(g, [&](int s, int t) {
    ok = flow_between(g, s, t, k) >= k;
    return ok;
  });
  return ok;
}

namespace {

struct BlockDfs {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<int>> blocks;
  std::vector<char> is_cut;
  int timer = 1;

  explicit BlockDfs(const Graph& graph)
      : g(graph), disc(graph.order(), 0), low(graph.order(), 0),
        is_cut(graph.order(), 0) {}

  void pop_block(int u, int v) {
    std::vector<int> verts;
    for (;;) {
      auto e = estack.back();
      estack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e.first == u && e.second == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    blocks.push_back(std::move(verts));
  }

  void run(int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    bool parent_skipped = false;
    for (int u : g.neighbors(v)) {
      if (u == parent && !parent_skipped) {
        parent_skipped = true;
        continue;
      }
      if (!disc[u]) {
        ++children;
        estack.emplace_back(v, u);
        run(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          if (parent != -1) is_cut[v] = 1;
          pop_block(v, u);
        }
      } else if (disc[u] < disc[v]) {
        estack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    }
    if (parent == -1 && children >= 2) is_cut[v] = 1;
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument("block_decomposition: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("block_decomposition: graph not connected");
  BlockDfs dfs(g);
  dfs.run(0, -1);
  BlockDecomposition out;
  out.blocks = std::move(dfs.blocks);
  for (int v = 0; v < g.order(); ++v)
    if (dfs.is_cut[v]) out.cut_vertices.push_back(v);
  for (const auto& b : out.blocks)
    ++out.block_order_histogram[static_cast<int>(b.size())];
  return out;
}

}  // namespace lnf
