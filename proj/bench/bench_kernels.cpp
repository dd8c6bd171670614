// Serial reference vs OpenMP kernel for the three hot loops.

#include <benchmark/benchmark.h>

#include "sdke/alternating.hpp"
#include "sdke/determinantal.hpp"
#include "sdke/verification.hpp"

namespace {

using namespace sdke;

void BM_RyserSerial(benchmark::State& state) {
  const Graph g = random_graph(state.range(0), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(perm_adjacency_serial(g));
}

void BM_RyserParallel(benchmark::State& state) {
  const Graph g = random_graph(state.range(0), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(perm_adjacency(g));
}

void BM_ClosedWalkFlagsSerial(benchmark::State& state) {
  const Graph g = random_matchable_graph(state.range(0), 8.0 / state.range(0), 2);
  const Matching m = maximum_matching(g);
  for (auto _ : state) benchmark::DoNotOptimize(closed_walk_flags_serial(g, m));
}

void BM_ClosedWalkFlagsParallel(benchmark::State& state) {
  const Graph g = random_matchable_graph(state.range(0), 8.0 / state.range(0), 2);
  const Matching m = maximum_matching(g);
  for (auto _ : state) benchmark::DoNotOptimize(closed_walk_flags(g, m));
}

void BM_SachsSerial(benchmark::State& state) {
  const Graph g = random_graph(state.range(0), 0.4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sachs_sums_serial(g));
}

void BM_SachsParallel(benchmark::State& state) {
  const Graph g = random_graph(state.range(0), 0.4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sachs_sums(g));
}

}  // namespace

BENCHMARK(BM_RyserSerial)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RyserParallel)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosedWalkFlagsSerial)->Arg(200)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedWalkFlagsParallel)->Arg(200)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SachsSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SachsParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
