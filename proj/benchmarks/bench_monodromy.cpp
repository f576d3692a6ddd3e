#include <benchmark/benchmark.h>

#include "hf/monodromy.hpp"

using namespace hf;

static void BM_CountTuples(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::int64_t count = 0;
  for (auto _ : state) {
    count = count_simple_monodromy(d, n);
    benchmark::DoNotOptimize(count);
  }
  state.counters["tuples"] = static_cast<double>(count);
}
BENCHMARK(BM_CountTuples)->Args({4, 6})->Args({5, 6})->Args({5, 8})->Unit(benchmark::kMillisecond);

static void BM_ConvolutionOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolution_transitive_count(d, n));
  }
}
BENCHMARK(BM_ConvolutionOracle)->Args({5, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
