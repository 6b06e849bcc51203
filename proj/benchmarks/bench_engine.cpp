#include <benchmark/benchmark.h>

#include "bernstein/engine.hpp"

using namespace bernstein;

static void BM_BernsteinExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GalleryFn f = preset("thomae-default");
  const BernsteinSampler s(f, n);
  const Rational x(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(s.exact(x));
}
BENCHMARK(BM_BernsteinExact)->RangeMultiplier(4)->Range(16, 4096);

static void BM_BernsteinFloat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GalleryFn f = preset("thomae-default");
  const BernsteinSampler s(f, n);
  const Rational x(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(s.approx(x));
}
BENCHMARK(BM_BernsteinFloat)->RangeMultiplier(8)->Range(16, 1 << 20);

// Polynomial images skip the PMF row entirely.
static void BM_ClosedFormSquare(benchmark::State& state) {
  const BigInt n = BigInt(1) << static_cast<mp_bitcnt_t>(state.range(0));
  const Polynomial p = Polynomial::monomial(2);
  const Rational x(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(bernstein_polynomial(p, n, x));
}
BENCHMARK(BM_ClosedFormSquare)->DenseRange(10, 40, 10);

static void BM_Judge(benchmark::State& state) {
  const GalleryFn f = preset("heaviside");
  const auto sched = default_schedule(Mode::Exact);
  for (auto _ : state) {
    benchmark::DoNotOptimize(converge_report(f, Rational(1, 2), sched, Rational(1, 100)));
  }
}
BENCHMARK(BM_Judge)->Unit(benchmark::kMillisecond);
