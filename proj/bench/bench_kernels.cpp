// Serial vs OpenMP kernels on seeded random clutters.
//   ./bench_kernels --benchmark_filter=Vertex

#include <benchmark/benchmark.h>

#include <random>

#include "hgpoly/betti.hpp"
#include "hgpoly/enumerate.hpp"

namespace {

using namespace hgpoly;

Hypergraph random_clutter(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, 3);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("v" + std::to_string(k));
  std::vector<VertexMask> edges;
  for (std::size_t attempt = 0; attempt < 50 * m && edges.size() < m; ++attempt) {
    VertexMask e = 0;
    while (static_cast<std::size_t>(popcount(e)) < size(rng)) e |= VertexMask{1} << (rng() % n);
    bool ok = true;
    for (VertexMask f : edges) ok = ok && (e & f) != e && (e & f) != f;
    if (ok) edges.push_back(e);
  }
  return Hypergraph::from_masks(labels, edges);
}

ExecPolicy policy(const benchmark::State& state) {
  return state.range(1) == 0 ? ExecPolicy::serial() : ExecPolicy::omp(static_cast<int>(state.range(1)));
}

Limits roomy() {
  Limits l;
  l.max_vertices = 30;
  l.max_edges = 30;
  l.max_homology_vertices = 16;
  return l;
}

void VertexInduced(benchmark::State& state) {
  const auto h = random_clutter(static_cast<std::size_t>(state.range(0)), 20, 1);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_induced_poly(h, roomy(), policy(state)));
  state.SetItemsProcessed(state.iterations() << state.range(0));
}

void VertexInducedReference(benchmark::State& state) {
  const auto h = random_clutter(static_cast<std::size_t>(state.range(0)), 20, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::vertex_induced_poly(h));
  state.SetItemsProcessed(state.iterations() << state.range(0));
}

void EdgeInduced(benchmark::State& state) {
  const auto h = random_clutter(24, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(edge_induced_poly(h, roomy(), policy(state)));
  state.SetItemsProcessed(state.iterations() << h.num_edges());
}

void Hochster(benchmark::State& state) {
  const auto h = random_clutter(static_cast<std::size_t>(state.range(0)), 14, 3);
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(h, roomy(), policy(state)));
  state.SetItemsProcessed(state.iterations() << state.range(0));
}

// second argument: 0 = serial, otherwise the OpenMP thread count
BENCHMARK(VertexInduced)->ArgsProduct({{16, 20}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(VertexInducedReference)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(EdgeInduced)->ArgsProduct({{16, 20}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(Hochster)->ArgsProduct({{10, 12}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
