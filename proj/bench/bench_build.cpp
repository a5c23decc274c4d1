#include <benchmark/benchmark.h>

#include "flipgraph/flip_graph.hpp"

using namespace flipgraph;

static void BM_Reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_flip_graph_reference(n, ColourScheme::cyclic(2)));
  }
}
BENCHMARK(BM_Reference)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

static void BM_Parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BuildOptions options{kDefaultNodeBudget, static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_flip_graph(n, ColourScheme::cyclic(2), options));
  }
}
BENCHMARK(BM_Parallel)
    ->ArgsProduct({{7, 8, 9}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

static void BM_ParallelFourColours(benchmark::State& state) {
  const BuildOptions options{kDefaultNodeBudget, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_flip_graph(7, ColourScheme::cyclic(4), options));
  }
}
BENCHMARK(BM_ParallelFourColours)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
