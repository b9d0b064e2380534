#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "lnf/graph.hpp"

namespace lnf {

enum class LocalPredicate {
  none,
  locally_nonforesty,
  // every neighborhood induces a triangle plus one isolated vertex
  triangle_plus_isolated,
};

struct EnumerationSpec {
  int order = 0;               // 1..16
  int max_edges = -1;          // -1: unbounded; enforced during generation
  int max_degree = -1;         // -1: unbounded; enforced during generation
  int min_degree_final = 0;    // required of completed graphs only
  int connectivity = 0;        // is_k_connected filter on completed graphs
  LocalPredicate local_predicate = LocalPredicate::none;
  int jobs = 1;
};

// Isomorph-free exhaustive generation by canonical vertex augmentation:
// every graph is produced from exactly one canonical parent, so the visitor
// runs exactly once per isomorphism class meeting all constraints.  Visited
// graphs carry their canonical labelling.  With jobs > 1 the visitor is
// serialized but call order is unspecified; the returned count never
// depends on jobs.
std::uint64_t enumerate_graphs(const EnumerationSpec& spec,
                               const std::function<void(const Graph&)>& visit = {});

struct MinimalityReport {
  int k = 0;
  int n = 0;
  int budget = 0;
  std::uint64_t graphs_examined = 0;
  std::optional<Graph> qualifying_witness;
  std::int64_t elapsed_ms = 0;
  bool certified = false;
};

// Exhaustively checks whether some graph of order n with at most `budget`
// edges is k-connected with a cycle in every vertex neighborhood.  Every
// candidate with minimum degree >= max(3, k) is examined; the reported
// witness, when one exists, is the one with the least canonical encoding,
// which makes the report independent of worker count.  k in {1, 2, 4},
// 8 <= n <= 10.
MinimalityReport verify_minimality(int k, int n, int budget, int jobs = 1);

// Number of graphs of order n (5 <= n <= 12) in which every vertex
// neighborhood induces a triangle plus one isolated vertex.  Such graphs
// are 4-regular, which bounds the scan.
std::uint64_t count_triangle_plus_isolated_neighborhoods(int n, int jobs = 1);

}  // namespace lnf
