#include <adnil/enumeration.hpp>
#include <adnil/nilpotence.hpp>

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<adnil::StaircasePartition> all_at(int n) {
  return {adnil::enumerate_all(n).begin(), adnil::enumerate_all(n).end()};
}

void BM_ClassFast(benchmark::State& state) {
  const auto parts = all_at(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(adnil::class_fast(p));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(parts.size()));
}

void BM_ClassTableau(benchmark::State& state) {
  const auto parts = all_at(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(adnil::class_tableau(p));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(parts.size()));
}

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    for (const auto& p : adnil::enumerate_all(n)) count += p.part(1);
    benchmark::DoNotOptimize(count);
  }
}

void BM_ClassifyBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(adnil::classify_bruteforce(n, {jobs, true}));
}

}  // namespace

BENCHMARK(BM_ClassFast)->DenseRange(6, 10, 2);
BENCHMARK(BM_ClassTableau)->DenseRange(6, 10, 2);
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(12);
BENCHMARK(BM_ClassifyBrute)->Args({11, 1})->Args({11, 0})->Unit(benchmark::kMillisecond);
