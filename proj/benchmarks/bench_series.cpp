#include <benchmark/benchmark.h>

#include "genuscount/classic.hpp"
#include "genuscount/expansions.hpp"
#include "genuscount/kappa_series.hpp"
#include "genuscount/pairings.hpp"
#include "genuscount/series.hpp"

using namespace genuscount;

static void bm_half_power(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(half_power(11, true, order));
  }
}
BENCHMARK(bm_half_power)->Arg(32)->Arg(128);

static void bm_stirling_gf(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_stirling_gf(2, 15));
  }
}
BENCHMARK(bm_stirling_gf)->Unit(benchmark::kMillisecond);

static void bm_solve_z1(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_Z1(order, order));
  }
}
BENCHMARK(bm_solve_z1)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void bm_epsilon(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon(12, 5));
  }
}
BENCHMARK(bm_epsilon);

static void bm_bell(benchmark::State& state) {
  for (auto _ : state) {
    // memoization makes repeat calls cheap; the interesting cost is cold
    benchmark::DoNotOptimize(bell(60));
  }
}
BENCHMARK(bm_bell);

BENCHMARK_MAIN();
