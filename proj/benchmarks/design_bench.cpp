#include <benchmark/benchmark.h>

#include <vector>

#include "ooc/clique.hpp"
#include "ooc/designer.hpp"

namespace {

// Args: n, w.
void BM_DesignFixed(benchmark::State& state) {
  const ooc::CodeParams params{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1, 1};
  std::size_t sets = 0;
  for (auto _ : state) {
    const auto family = ooc::design_fixed(params);
    sets = family.sets.size();
    benchmark::DoNotOptimize(sets);
  }
  state.counters["sets"] = static_cast<double>(sets);
}

void BM_BuildGraph(benchmark::State& state) {
  const auto report = ooc::design_fixed_report({static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(ooc::build_graph(report.pool, 1).size());
  state.counters["pool"] = static_cast<double>(report.pool.size());
}

void BM_GreedyClique(benchmark::State& state) {
  const auto report = ooc::design_fixed_report({static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1, 1});
  const auto g = ooc::build_graph(report.pool, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ooc::enumerate_cliques(g).size());
}

}  // namespace

BENCHMARK(BM_DesignFixed)->Args({13, 4})->Args({25, 3})->Args({40, 4})->Args({64, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraph)->Args({64, 4})->Args({121, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GreedyClique)->Args({64, 4})->Args({121, 4})->Unit(benchmark::kMicrosecond);
