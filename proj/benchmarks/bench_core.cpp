// Microbenchmarks for the hot paths: canonical forms, constrained
// enumeration, connectivity flows, and the graph6 codec.

#include <benchmark/benchmark.h>

#include "lnf/connectivity.hpp"
#include "lnf/constructions.hpp"
#include "lnf/enumerate.hpp"
#include "lnf/graph6.hpp"
#include "lnf/small_graph.hpp"

namespace {

using namespace lnf;

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

void bm_canonical_form_petersen(benchmark::State& state) {
  SmallGraph g = SmallGraph::from_graph(petersen());
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_form_petersen);

void bm_enumerate_order7(benchmark::State& state) {
  EnumerationSpec spec;
  spec.order = 7;
  for (auto _ : state) {
    uint64_t count = enumerate_graphs(spec, nullptr);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_enumerate_order7)->Unit(benchmark::kMillisecond);

void bm_enumerate_lemma1_order10(benchmark::State& state) {
  for (auto _ : state) {
    uint64_t count = count_triangle_plus_isolated_neighborhoods(10, 1);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_enumerate_lemma1_order10)->Unit(benchmark::kMillisecond);

void bm_vertex_connectivity_harary(benchmark::State& state) {
  Graph g = harary_graph(6, 40);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(bm_vertex_connectivity_harary)->Unit(benchmark::kMicrosecond);

void bm_graph6_round_trip(benchmark::State& state) {
  Graph g = harary_graph(7, 60);
  std::string text = serialize_graph6(g);
  for (auto _ : state) {
    Graph back = parse_graph6(text);
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(bm_graph6_round_trip)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
