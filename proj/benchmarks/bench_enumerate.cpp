#include <benchmark/benchmark.h>

#include "genuscount/enumerate.hpp"
#include "genuscount/genus.hpp"

using namespace genuscount;

static void bm_count_by_genus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t partitions = 0;
  for (auto _ : state) {
    const GenusCountTable table = count_by_genus(n, Constraint::none());
    benchmark::DoNotOptimize(table);
    partitions += table.total().convert_to<std::uint64_t>();
  }
  state.SetItemsProcessed(static_cast<int64_t>(partitions));
}
BENCHMARK(bm_count_by_genus)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

static void bm_count_types_no_singletons(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t partitions = 0;
  for (auto _ : state) {
    const GenusCountTable table = count_types(n, 2);
    benchmark::DoNotOptimize(table);
    partitions += table.total().convert_to<std::uint64_t>();
  }
  state.SetItemsProcessed(static_cast<int64_t>(partitions));
}
BENCHMARK(bm_count_types_no_singletons)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

static void bm_count_parallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const GenusCountTable table = count_by_genus(12, Constraint::none(), threads);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(bm_count_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void bm_genus_of(benchmark::State& state) {
  const SetPartition p = SetPartition::parse("1,4,5,8,10|2,3,6,7,9,11,12");
  for (auto _ : state) {
    benchmark::DoNotOptimize(genus_of(p));
  }
}
BENCHMARK(bm_genus_of);

static void bm_split_workload(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_workload(12, Constraint::none(), 6));
  }
}
BENCHMARK(bm_split_workload);

BENCHMARK_MAIN();
