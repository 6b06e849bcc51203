#include <benchmark/benchmark.h>

#include "bernstein/binomial.hpp"

using namespace bernstein;

static void BM_PmfRowScaled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Rational x(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(pmf_row_scaled(n, x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PmfRowScaled)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_PmfRowExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Rational x(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(pmf_row(n, x));
}
BENCHMARK(BM_PmfRowExact)->RangeMultiplier(4)->Range(16, 1024);

static void BM_PmfRowFloat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pmf_row_float(n, 0.3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PmfRowFloat)->RangeMultiplier(8)->Range(16, 1 << 20)->Complexity();
