#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "propkit/grid.hpp"

using namespace propkit;

namespace {

std::vector<GridPoint> points(int n) {
  std::vector<GridPoint> pts;
  for (double t : linspace(0.0, 6.0, n))
    for (double r : linspace(0.05, 5.0, n))
      if (std::abs(t - r) > 1e-3) pts.push_back({t, r});
  return pts;
}

std::vector<OracleCase> oracle_cases() {
  std::vector<OracleCase> cases;
  for (int D = 1; D <= 5; ++D)
    for (GridPoint pt : {GridPoint{2, 0.5}, GridPoint{0, 1}, GridPoint{3, 1}})
      cases.push_back({{D, 1.0}, pt});
  return cases;
}

void BM_ScalarGridSerial(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scalar_grid_serial({3, 1.0}, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void BM_ScalarGridParallel(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scalar_grid({3, 1.0}, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void BM_OracleGridSerial(benchmark::State& state) {
  const auto cases = oracle_cases();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_grid_serial(cases));
}

void BM_OracleGridParallel(benchmark::State& state) {
  const auto cases = oracle_cases();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_grid(cases));
}

}  // namespace

BENCHMARK(BM_ScalarGridSerial)->Arg(50)->Arg(200);
BENCHMARK(BM_ScalarGridParallel)->Arg(50)->Arg(200);
BENCHMARK(BM_OracleGridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleGridParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
