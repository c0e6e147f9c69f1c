#include <benchmark/benchmark.h>

#include "eccbounds/enumerate.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    eccb::for_each_connected_labeled_graph(n, [&](const eccb::Graph&, std::uint64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SweepAllBounds(benchmark::State& state) {
  eccb::SweepConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = static_cast<int>(state.range(0));
  cfg.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(eccb::sweep(cfg).total_graphs);
}
BENCHMARK(BM_SweepAllBounds)->Args({5, 1})->Args({6, 1})->Args({6, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
