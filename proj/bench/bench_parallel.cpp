// Serial reference drivers against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "sqtile/oracle.hpp"
#include "sqtile/search.hpp"

namespace {

void BM_SearchSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = sqtile::enumerate_max_serial(n, {.all_optima = true});
    benchmark::DoNotOptimize(r);
    state.counters["nodes"] = static_cast<double>(r.nodes_explored);
  }
}

void BM_SearchParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto r = sqtile::enumerate_max_parallel(n, {.all_optima = true, .workers = workers});
    benchmark::DoNotOptimize(r);
    state.counters["nodes"] = static_cast<double>(r.nodes_explored);
  }
}

void BM_SearchUnseeded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = sqtile::enumerate_max_serial(n, {.seed_from_constructions = false});
    benchmark::DoNotOptimize(r);
  }
}

void BM_OracleSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sqtile::grid_enumerate_serial(n, d));
}

void BM_OracleParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(sqtile::grid_enumerate_parallel(n, d, {.workers = workers}));
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->ArgsProduct({{7, 8, 9}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchUnseeded)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Args({8, 10})->Args({9, 12})->Args({5, 15})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)
    ->ArgsProduct({{9}, {12}, {1, 2, 4}})
    ->Args({5, 15, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
