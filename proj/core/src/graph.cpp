#include "lnf/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace lnf {

Graph::Graph(int order) {
  if (order < 0 || order > max_order)
    throw std::invalid_argument("graph order out of range: " +
                                std::to_string(order));
  order_ = order;
  stride_ = (order + 63) / 64;
  rows_.assign(static_cast<std::size_t>(order_) * stride_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_)
    throw std::out_of_range("vertex out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge rejected");
  if (adjacent(u, v)) return;
  rows_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= 1ull << (v & 63);
  rows_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] |= 1ull << (u & 63);
  ++edge_count_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < stride_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < stride_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  int d = 0;
  for (int v = 0; v < order_; ++v)
    d = v == 0 ? degree(v) : std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
  return d;
}

Graph make_graph(int order, const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("duplicate vertex in induced_subgraph");
  Graph sub(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return sub;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

Graph complete_graph(int order) {
  Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int order) {
  if (order < 3) throw std::invalid_argument("cycle needs order >= 3");
  Graph g(order);
  for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

Graph path_graph(int order) {
  Graph g(order);
  for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace lnf
