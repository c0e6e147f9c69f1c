#include <benchmark/benchmark.h>

#include <random>

#include "eccbounds/bounds.hpp"
#include "eccbounds/enumerate.hpp"
#include "eccbounds/graph6.hpp"
#include "eccbounds/invariants.hpp"

namespace {

eccb::Graph random_connected(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  eccb::EdgeList list{n, {}};
  for (int v = 1; v < n; ++v) list.edges.push_back({static_cast<int>(rng() % v), v});
  for (int u = 0; u < n; ++u)
    for (int v = u + 2; v < n; ++v)
      if (coin(rng)) list.edges.push_back({u, v});
  // The tree edge into v may already be (u, v) with u = v - 1; drop repeats.
  std::sort(list.edges.begin(), list.edges.end(), [](auto a, auto b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  list.edges.erase(std::unique(list.edges.begin(), list.edges.end()), list.edges.end());
  return eccb::Graph::from_edge_list(list);
}

void BM_ComputeAll(benchmark::State& state) {
  const auto g = random_connected(static_cast<int>(state.range(0)), 0.15, 42);
  for (auto _ : state) benchmark::DoNotOptimize(eccb::compute_all(g));
}
BENCHMARK(BM_ComputeAll)->Arg(7)->Arg(16)->Arg(32)->Arg(64);

void BM_NaiveOracle(benchmark::State& state) {
  const auto g = random_connected(static_cast<int>(state.range(0)), 0.15, 42);
  for (auto _ : state) benchmark::DoNotOptimize(eccb::naive_modified_eccentric_connectivity(g));
}
BENCHMARK(BM_NaiveOracle)->Arg(7)->Arg(16)->Arg(32)->Arg(64);

void BM_CheckAll(benchmark::State& state) {
  const auto g = random_connected(static_cast<int>(state.range(0)), 0.3, 7);
  const auto inv = eccb::compute_all(g);
  for (auto _ : state) benchmark::DoNotOptimize(eccb::check_all(g, inv));
}
BENCHMARK(BM_CheckAll)->Arg(7)->Arg(32)->Arg(64);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const auto g = random_connected(static_cast<int>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(eccb::parse_graph6(eccb::to_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(7)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
