#include <benchmark/benchmark.h>

#include "hf/field.hpp"

using namespace hf;

static void BM_GF16Mul(benchmark::State& state) {
  auto f = Field::make(2, 4);
  std::vector<FieldElem> elems;
  for (std::int64_t i = 0; i < f->order(); ++i) elems.push_back(f->element_at(i));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = elems[i % 16];
    const auto& b = elems[(i * 7 + 3) % 16];
    benchmark::DoNotOptimize(a * b);
    ++i;
  }
}
BENCHMARK(BM_GF16Mul);

BENCHMARK_MAIN();
