#include "lnf/enumerate.hpp"

#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "lnf/connectivity.hpp"
#include "lnf/graph6.hpp"
#include "lnf/properties.hpp"
#include "lnf/small_graph.hpp"

namespace lnf {

namespace {

bool neighborhood_is_triangle_plus_isolated(const Graph& g, int v) {
  if (g.degree(v) != 4) return false;
  Graph local = local_subgraph(g, v);
  if (local.size() != 3) return false;
  int isolated = 0, twos = 0;
  for (int u = 0; u < 4; ++u) {
    int d = local.degree(u);
    if (d == 0) ++isolated;
    if (d == 2) ++twos;
  }
  return isolated == 1 && twos == 3;
}

bool passes_local_predicate(const Graph& g, LocalPredicate pred) {
  switch (pred) {
    case LocalPredicate::none:
      return true;
    case LocalPredicate::locally_nonforesty:
      return is_locally_nonforesty(g);
    case LocalPredicate::triangle_plus_isolated:
      for (int v = 0; v < g.order(); ++v)
        if (!neighborhood_is_triangle_plus_isolated(g, v)) return false;
      return g.order() > 0;
  }
  return true;
}

struct EncHash {
  std::size_t operator()(const std::array<std::uint64_t, 2>& e) const {
    return std::hash<std::uint64_t>()(e[0] * 0x9e3779b97f4a7c15ull ^ e[1]);
  }
};

struct Generator {
  int target;
  int max_edges;    // normalized to a real cap
  int max_degree;   // normalized to target - 1
  int min_deg_final;
  int connectivity;
  LocalPredicate pred;

  int collect_order = -1;  // when set, recursion stops there and stashes
  std::vector<SmallGraph>* collected = nullptr;

  std::uint64_t count = 0;
  const std::function<void(const Graph&)>* visit = nullptr;
  std::mutex* visit_mutex = nullptr;

  explicit Generator(const EnumerationSpec& spec) {
    target = spec.order;
    int all = spec.order * (spec.order - 1) / 2;
    max_edges = spec.max_edges < 0 ? all : std::min(spec.max_edges, all);
    max_degree =
        spec.max_degree < 0 ? target - 1 : std::min(spec.max_degree, target - 1);
    min_deg_final = spec.min_degree_final;
    connectivity = spec.connectivity;
    pred = spec.local_predicate;
  }

  // Lower bound on edges still missing: every future vertex must reach
  // min_deg_final and present deficient vertices can only be fed by future
  // ones, each added edge covering at most two units of need.
  bool feasible(const SmallGraph& g) const {
    int future = target - g.n;
    int deficiency = 0;
    for (int v = 0; v < g.n; ++v)
      deficiency += std::max(0, min_deg_final - g.degree(v));
    if (deficiency > future * max_degree) return false;
    int need = future * min_deg_final + deficiency;
    return g.size() + (need + 1) / 2 <= max_edges;
  }

  void emit(const SmallGraph& g, const CanonicalForm& cf) {
    Graph out = canonical_relabel(g, cf).to_graph();
    if (out.min_degree() < min_deg_final) return;
    if (connectivity > 0 && !is_k_connected(out, connectivity)) return;
    if (!passes_local_predicate(out, pred)) return;
    ++count;
    if (visit && *visit) {
      if (visit_mutex) {
        std::lock_guard<std::mutex> lock(*visit_mutex);
        (*visit)(out);
      } else {
        (*visit)(out);
      }
    }
  }

  void extend(const SmallGraph& g) {
    if (g.n == collect_order) {
      collected->push_back(g);
      return;
    }
    int j = g.n;  // index of the vertex being added
    std::uint16_t eligible = 0;
    for (int v = 0; v < j; ++v)
      if (g.degree(v) < max_degree)
        eligible |= static_cast<std::uint16_t>(1u << v);

    std::unordered_set<std::array<std::uint64_t, 2>, EncHash> accepted;
    for (std::uint16_t nbrs = eligible;; nbrs = (nbrs - 1) & eligible) {
      int added = std::popcount(nbrs);
      if (added <= max_degree && g.size() + added <= max_edges) {
        SmallGraph child = g;
        child.n = j + 1;
        for (std::uint16_t rest = nbrs; rest;) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          child.add_edge(v, j);
        }
        if (feasible(child)) {
          CanonicalForm cf = canonical_form(child);
          // construction path is canonical iff the new vertex could be the
          // canonically deleted one
          int canon_last = cf.order[j];
          if (cf.orbit[canon_last] == cf.orbit[j] &&
              accepted.insert(cf.enc).second) {
            if (child.n == target)
              emit(child, cf);
            else
              extend(child);
          }
        }
      }
      if (nbrs == 0) break;
    }
  }

  void run_from_seed() {
    SmallGraph seed;
    seed.n = 1;
    if (target == 1) {
      if (feasible(seed)) emit(seed, canonical_form(seed));
      return;
    }
    if (feasible(seed)) extend(seed);
  }
};

void validate(const EnumerationSpec& spec) {
  if (spec.order < 1 || spec.order > SmallGraph::max_order)
    throw std::invalid_argument("enumeration order must be 1.." +
                                std::to_string(SmallGraph::max_order));
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

}  // namespace

std::uint64_t enumerate_graphs(const EnumerationSpec& spec,
                               const std::function<void(const Graph&)>& visit) {
  validate(spec);

  int split_order = spec.order - 3;
  if (spec.jobs <= 1 || split_order < 2) {
    Generator gen(spec);
    gen.visit = &visit;
    gen.run_from_seed();
    return gen.count;
  }

  // Workers take whole subtrees rooted at a fixed intermediate order, so
  // the visited set is the sequential one regardless of scheduling.
  std::vector<SmallGraph> roots;
  {
    Generator gen(spec);
    gen.collect_order = split_order;
    gen.collected = &roots;
    gen.run_from_seed();
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::mutex visit_mutex;
  int workers = std::min<int>(spec.jobs, static_cast<int>(roots.size()));
  std::vector<std::thread> pool;
  for (int w = 0; w < std::max(workers, 1); ++w)
    pool.emplace_back([&] {
      Generator gen(spec);
      gen.visit = &visit;
      gen.visit_mutex = &visit_mutex;
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= roots.size()) break;
        gen.extend(roots[i]);
      }
      total.fetch_add(gen.count);
    });
  for (auto& t : pool) t.join();
  return total.load();
}

MinimalityReport verify_minimality(int k, int n, int budget, int jobs) {
  if (k != 1 && k != 2 && k != 4)
    throw std::invalid_argument("verify_minimality: k must be 1, 2 or 4");
  if (n < 8 || n > 10)
    throw std::invalid_argument("verify_minimality: n must be 8..10");
  if (budget < 0) throw std::invalid_argument("verify_minimality: bad budget");

  auto start = std::chrono::steady_clock::now();

  EnumerationSpec spec;
  spec.order = n;
  spec.max_edges = budget;
  spec.min_degree_final = std::max(3, k);
  spec.jobs = jobs;

  MinimalityReport report;
  report.k = k;
  report.n = n;
  report.budget = budget;

  std::string best_key;
  std::optional<Graph> best;
  // visitor already serialized by enumerate_graphs
  report.graphs_examined = enumerate_graphs(spec, [&](const Graph& g) {
    if (!is_k_connected(g, k)) return;
    if (!is_locally_nonforesty(g)) return;
    std::string key = serialize_graph6(g);  // canonical: g is canon-labelled
    if (!best || key < best_key) {
      best_key = key;
      best = g;
    }
  });

  if (best) {
    assert(best->size() <= budget && is_k_connected(*best, k) &&
           is_locally_nonforesty(*best));
    report.qualifying_witness = std::move(best);
  }
  report.certified = true;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::uint64_t count_triangle_plus_isolated_neighborhoods(int n, int jobs) {
  if (n < 5 || n > 12)
    throw std::invalid_argument("neighborhood scan supports n = 5..12");
  EnumerationSpec spec;
  spec.order = n;
  spec.max_edges = 2 * n;  // 4-regular graphs have exactly 2n edges
  spec.max_degree = 4;
  spec.min_degree_final = 4;
  spec.local_predicate = LocalPredicate::triangle_plus_isolated;
  spec.jobs = jobs;
  return enumerate_graphs(spec);
}

}  // namespace lnf
