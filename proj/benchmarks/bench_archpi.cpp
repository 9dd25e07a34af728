#include <benchmark/benchmark.h>

#include "archpi/contfrac.hpp"
#include "archpi/interval.hpp"
#include "archpi/polygon.hpp"
#include "archpi/radical.hpp"
#include "archpi/series.hpp"

namespace {

using namespace archpi;

void BM_IsqrtFloor(benchmark::State& state) {
  const Integer n = pow10(static_cast<int>(state.range(0))) * 2;
  for (auto _ : state) benchmark::DoNotOptimize(isqrt_floor(n));
}
BENCHMARK(BM_IsqrtFloor)->RangeMultiplier(4)->Range(16, 4096);

void BM_BoundsAtDoublings(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounds_at(k, 12));
  state.SetLabel("n = " + std::to_string(sides_for(k)));
}
BENCHMARK(BM_BoundsAtDoublings)->DenseRange(0, 30, 5);

void BM_BoundsAtDigits(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounds_at(13, digits));
}
BENCHMARK(BM_BoundsAtDigits)->RangeMultiplier(4)->Range(8, 2048);

void BM_EvalRadical(benchmark::State& state) {
  const RadicalExpr e = nested_radical_form(sides_for(static_cast<int>(state.range(0))), Perimeter::Circumscribed);
  for (auto _ : state) benchmark::DoNotOptimize(eval_radical(e, 30));
}
BENCHMARK(BM_EvalRadical)->DenseRange(2, 20, 6);

void BM_CertifiedRationalBounds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certified_rational_bounds(5, 8, Integer(100)));
}
BENCHMARK(BM_CertifiedRationalBounds);

void BM_ExpandRational(benchmark::State& state) {
  const Rational q(pow10(static_cast<int>(state.range(0))) + 7, pow10(static_cast<int>(state.range(0)) - 1) + 3);
  for (auto _ : state) benchmark::DoNotOptimize(convergents(expand(q)));
}
BENCHMARK(BM_ExpandRational)->RangeMultiplier(4)->Range(8, 512);

void BM_Series(benchmark::State& state) {
  const auto kind = static_cast<SeriesKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_series(kind, 200, 12));
  state.SetLabel(std::string(series_name(kind)));
}
BENCHMARK(BM_Series)->DenseRange(0, 4);

}  // namespace

BENCHMARK_MAIN();
