#include <adnil/enumeration.hpp>
#include <adnil/qt_catalan.hpp>

#include <benchmark/benchmark.h>

namespace {

// n in range(0), h = n / 2.
void BM_CountSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adnil::count_atmost_sum(n, n / 2));
}

void BM_CountDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adnil::count_atmost_det(n, n / 2, adnil::DetVariant::upper_clip));
}

void BM_CountReflection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adnil::count_atmost_reflection(n, n / 2));
}

void BM_SeriesChebyshev(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adnil::series_chebyshev(n / 2, n + 1));
}

void BM_SeriesContfrac(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adnil::series_contfrac(n / 2, n + 1));
}

void BM_QtFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adnil::qt_catalan_formula(n));
}

}  // namespace

BENCHMARK(BM_CountSum)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_CountDet)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_CountReflection)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_SeriesChebyshev)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_SeriesContfrac)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_QtFormula)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
