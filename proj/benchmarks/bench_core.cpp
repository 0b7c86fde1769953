#include <benchmark/benchmark.h>

#include "qsimplex/bell.hpp"
#include "qsimplex/export.hpp"
#include "qsimplex/measure.hpp"
#include "qsimplex/protocol.hpp"

namespace {

using namespace qsimplex;

void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix rho = density(SimplexState(n, {0.5, -0.3, 0.1}));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho));
}
BENCHMARK(BM_Eigenvalues)->Arg(2)->Arg(4)->Arg(6);

void BM_BoundB(benchmark::State& state) {
  const DenseMatrix rho = density(SimplexState(4, {0.5, -0.5, 0.5}));
  const auto& ops = four_flip_operators();
  for (auto _ : state) benchmark::DoNotOptimize(bound_B(rho, ops));
}
BENCHMARK(BM_BoundB);

void BM_SimulateStep(benchmark::State& state) {
  const SimplexState s(static_cast<int>(state.range(0)), {0.5, -0.5, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(simulate_step(s));
}
BENCHMARK(BM_SimulateStep)->Arg(2)->Arg(4);

void BM_OptimizeSettings(benchmark::State& state) {
  const SimplexState s(4, {0.9, -0.9, 0.9});
  for (auto _ : state) benchmark::DoNotOptimize(optimize_settings(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OptimizeSettings)->Arg(1)->Arg(20);

void BM_SampleGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_grid(4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SampleGrid)->Arg(11)->Arg(21);

}  // namespace

BENCHMARK_MAIN();
