#include <benchmark/benchmark.h>

#include <random>

#include "reeb/crossings.hpp"
#include "reeb/gadget.hpp"
#include "reeb/layout.hpp"
#include "reeb/stretch.hpp"

namespace {

using namespace reeb;

std::shared_ptr<const ReebGraph> alternating_cycle(int n) {
  std::vector<VertexSpec> specs;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    specs.push_back({"v" + std::to_string(i), Rational(i % 2 == 0 ? 1 : 0)});
    edges.push_back({static_cast<VertexIndex>(i), static_cast<VertexIndex>((i + 1) % n)});
  }
  return std::make_shared<const ReebGraph>(std::move(specs), std::move(edges));
}

void BM_ExactBowtie(benchmark::State& state) {
  const auto g = alternating_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_rgcn(g).crossings);
}
BENCHMARK(BM_ExactBowtie)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_GeometricCountGadget(benchmark::State& state) {
  // Complete graph on n vertices; the reduced drawing grows as n^5.
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(ids[i], ids[j]);
  }
  const OlaGraph g = make_ola_graph(ids, edges);
  const OlaSolution s = ola_brute(g);
  const GadgetInstance inst = ola_reduce(g, s.cost);
  const Drawing d = arrangement_to_drawing(inst, s.arrangement);
  for (auto _ : state) benchmark::DoNotOptimize(count_crossings_geometric(d).count);
  state.counters["edges"] = static_cast<double>(d.graph().edge_count());
}
BENCHMARK(BM_GeometricCountGadget)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_LayoutCycle(benchmark::State& state) {
  std::mt19937 rng(1);
  const int n = static_cast<int>(state.range(0));
  std::vector<VertexSpec> specs;
  std::vector<Edge> edges;
  long prev = -1;
  for (int i = 0; i < n; ++i) {
    long h;
    do h = std::uniform_int_distribution<long>(0, 20)(rng);
    while (h == prev || (i == n - 1 && h == specs.front().height));
    specs.push_back({"v" + std::to_string(i), Rational(h)});
    edges.push_back({static_cast<VertexIndex>(i), static_cast<VertexIndex>((i + 1) % n)});
    prev = h;
  }
  const auto g = std::make_shared<const ReebGraph>(std::move(specs), std::move(edges));
  for (auto _ : state) benchmark::DoNotOptimize(layout_cycle(g));
}
BENCHMARK(BM_LayoutCycle)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_StretchGrid(benchmark::State& state) {
  const TriHexGrid t = tri_hex_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stretch(t.drawing));
}
BENCHMARK(BM_StretchGrid)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
