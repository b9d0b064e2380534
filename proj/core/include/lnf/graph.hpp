#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lnf {

// Simple undirected graph on vertices 0..order-1, adjacency kept as packed
// bit rows.  Values are cheap to copy at the orders this library works with
// and are treated as immutable once built; all operations on them are pure.
class Graph {
 public:
  static constexpr int max_order = 4096;

  Graph() = default;
  explicit Graph(int order);

  int order() const { return order_; }
  int size() const { return edge_count_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return row(u)[v >> 6] >> (v & 63) & 1u;
  }

  // Loops are rejected; adding an edge twice is a no-op.
  void add_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // ascending (u, v), u < v

  int min_degree() const;  // 0 for the empty graph
  int max_degree() const;

  const std::uint64_t* row(int v) const { return rows_.data() + v * stride_; }
  int row_words() const { return stride_; }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  int stride_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
};

Graph make_graph(int order, const std::vector<std::pair<int, int>>& edges);

// Subgraph induced by the vertex set `vertices` (duplicates rejected), with
// the kept vertices relabelled 0..|S|-1 in ascending original order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

// Disjoint union plus all edges between the two sides.
Graph join(const Graph& a, const Graph& b);

Graph complete_graph(int order);
Graph cycle_graph(int order);  // order >= 3
Graph path_graph(int order);

}  // namespace lnf
