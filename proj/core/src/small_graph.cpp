#include "lnf/small_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace lnf {

SmallGraph SmallGraph::from_graph(const Graph& g) {
  if (g.order() > max_order)
    throw std::invalid_argument("graph order above SmallGraph limit");
  SmallGraph s;
  s.n = g.order();
  for (auto [u, v] : g.edges()) s.add_edge(u, v);
  return s;
}

Graph SmallGraph::to_graph() const {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adjacent(u, v)) g.add_edge(u, v);
  return g;
}

namespace {

struct OrbitTracker {
  std::array<std::uint8_t, SmallGraph::max_order> parent{};

  void init(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = static_cast<std::uint8_t>(a);  // smaller vertex stays root
  }
};

// Individualization-refinement search for the lexicographically least
// adjacency encoding.  Branches whose partial encoding already exceeds the
// best are cut; equal branches are all walked, and every leaf that ties the
// best certifies an automorphism, so the orbit partition ends up exact.
struct CanonSearch {
  const SmallGraph& g;
  int n;
  bool have_best = false;
  std::array<std::uint64_t, 2> best_enc{};
  std::array<std::uint8_t, 16> best_order{};
  OrbitTracker orbits;

  struct Cells {
    std::array<std::uint16_t, 16> c;
    int count = 0;
  };

  explicit CanonSearch(const SmallGraph& graph) : g(graph), n(graph.n) {
    orbits.init(n);
  }

  // Equitable refinement: split cells by neighbor counts into any other
  // cell, sub-cells ordered by count.  Restarts after each split; cell
  // order is what makes the outcome isomorphism-invariant.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int si = 0; si < cells.count && !changed; ++si) {
        std::uint16_t splitter = cells.c[si];
        for (int di = 0; di < cells.count && !changed; ++di) {
          std::uint16_t cell = cells.c[di];
          if (std::popcount(cell) <= 1) continue;
          std::array<std::uint16_t, 17> bucket{};
          int maxc = 0;
          for (std::uint16_t rest = cell; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int cnt = std::popcount(static_cast<std::uint16_t>(g.adj[v] & splitter));
            bucket[cnt] |= static_cast<std::uint16_t>(1u << v);
            maxc = std::max(maxc, cnt);
          }
          int parts = 0;
          for (int cnt = 0; cnt <= maxc; ++cnt)
            if (bucket[cnt]) ++parts;
          if (parts <= 1) continue;
          for (int i = cells.count - 1; i > di; --i)
            cells.c[i + parts - 1] = cells.c[i];
          int at = di;
          for (int cnt = 0; cnt <= maxc; ++cnt)
            if (bucket[cnt]) cells.c[at++] = bucket[cnt];
          cells.count += parts - 1;
          changed = true;
        }
      }
    }
  }

  static bool get_bit(const std::array<std::uint64_t, 2>& enc, int p) {
    return enc[p >> 6] >> (63 - (p & 63)) & 1;
  }
  static void set_bit(std::array<std::uint64_t, 2>& enc, int p) {
    enc[p >> 6] |= 1ull << (63 - (p & 63));
  }

  void search(Cells cells, std::array<std::uint8_t, 16> ord, int fixed,
              std::array<std::uint64_t, 2> enc, bool known_less) {
    refine(cells);
    // singletons never split, so cells[0..fixed) are the placed vertices
    int fx = fixed;
    while (fx < cells.count && std::popcount(cells.c[fx]) == 1) {
      int v = std::countr_zero(cells.c[fx]);
      ord[fx] = static_cast<std::uint8_t>(v);
      int base = fx * (fx - 1) / 2;
      for (int i = 0; i < fx; ++i) {
        bool bit = g.adjacent(v, ord[i]);
        if (bit) set_bit(enc, base + i);
        if (!known_less && have_best) {
          bool bb = get_bit(best_enc, base + i);
          if (bit != bb) {
            if (bit) return;  // prefix already larger, best can only shrink
            known_less = true;
          }
        }
      }
      ++fx;
    }
    if (fx == cells.count) {
      leaf(ord, enc);
      return;
    }
    std::uint16_t target = cells.c[fx];
    for (std::uint16_t rest = target; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      Cells child = cells;
      for (int i = child.count - 1; i > fx; --i) child.c[i + 1] = child.c[i];
      child.c[fx] = static_cast<std::uint16_t>(1u << v);
      child.c[fx + 1] = target & static_cast<std::uint16_t>(~(1u << v));
      ++child.count;
      search(child, ord, fx, enc, known_less);
    }
  }

  // Flags may be stale once a better leaf lands elsewhere, so the decision
  // here re-compares the full encoding.
  void leaf(const std::array<std::uint8_t, 16>& ord,
            const std::array<std::uint64_t, 2>& enc) {
    if (!have_best) {
      have_best = true;
      best_enc = enc;
      best_order = ord;
      return;
    }
    if (enc < best_enc) {
      best_enc = enc;
      best_order = ord;
      return;
    }
    if (enc == best_enc)
      for (int p = 0; p < n; ++p) orbits.unite(best_order[p], ord[p]);
  }
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
  CanonSearch search(g);
  CanonSearch::Cells cells;
  if (g.n > 0) {
    cells.c[0] = static_cast<std::uint16_t>((1u << g.n) - 1);
    cells.count = 1;
  }
  search.search(cells, {}, 0, {}, false);
  CanonicalForm cf;
  cf.enc = search.best_enc;
  cf.order = search.best_order;
  for (int v = 0; v < g.n; ++v)
    cf.orbit[v] = static_cast<std::uint8_t>(search.orbits.find(v));
  return cf;
}

SmallGraph canonical_relabel(const SmallGraph& g, const CanonicalForm& cf) {
  SmallGraph out;
  out.n = g.n;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.adjacent(cf.order[i], cf.order[j])) out.add_edge(i, j);
  return out;
}

Graph canonical_relabel(const Graph& g) {
  SmallGraph s = SmallGraph::from_graph(g);
  return canonical_relabel(s, canonical_form(s)).to_graph();
}

}  // namespace lnf
