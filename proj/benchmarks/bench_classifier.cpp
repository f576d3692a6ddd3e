#include <benchmark/benchmark.h>

#include "hf/classifier.hpp"

using namespace hf;

static void BM_ClassifySweepGF8(benchmark::State& state) {
  const FieldPtr field = Field::make(2, 3);
  const std::vector<P1Point> line = p1_points(field);
  for (auto _ : state) {
    int classified = 0;
    for (const P1Point& lambda : line) {
      for (const P1Point& j : line) {
        const H24Point point(lambda, j);
        if (component_membership(point).empty()) continue;
        benchmark::DoNotOptimize(classify(point));
        ++classified;
      }
    }
    benchmark::DoNotOptimize(classified);
  }
}
BENCHMARK(BM_ClassifySweepGF8)->Unit(benchmark::kMillisecond);

static void BM_RelabelCase2(benchmark::State& state) {
  const FieldPtr field = Field::make(2, 2);
  const ClassificationResult base =
      classify(H24Point(P1Point::finite(field->zero()), P1Point::finite(field->one())));
  const LabelPermutation swap_ends = {
      {"0", "1"}, {"1", "0"}, {"inf", "lambda"}, {"lambda", "inf"}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(s4_relabel(base, swap_ends));
  }
}
BENCHMARK(BM_RelabelCase2);

BENCHMARK_MAIN();
