#include <adnil/dyck.hpp>

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void BM_HeightBijection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<adnil::StaircasePartition> parts(adnil::enumerate_all(n).begin(), adnil::enumerate_all(n).end());
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(adnil::height_bijection(p));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(parts.size()));
}

void BM_HeightBijectionInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<adnil::DyckPath> paths;
  for (const auto& p : adnil::enumerate_all(n)) paths.push_back(adnil::height_bijection(p));
  for (auto _ : state)
    for (const auto& d : paths) benchmark::DoNotOptimize(adnil::height_bijection_inverse(d, n));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(paths.size()));
}

void BM_RotationPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<adnil::StaircasePartition> parts(adnil::enumerate_all(n).begin(), adnil::enumerate_all(n).end());
  for (auto _ : state)
    for (const auto& p : parts) benchmark::DoNotOptimize(adnil::rotation_path(p));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(parts.size()));
}

}  // namespace

BENCHMARK(BM_HeightBijection)->Arg(6)->Arg(8);
BENCHMARK(BM_HeightBijectionInverse)->Arg(6)->Arg(8);
BENCHMARK(BM_RotationPath)->Arg(6)->Arg(8);
