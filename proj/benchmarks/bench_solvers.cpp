#include <benchmark/benchmark.h>

#include <vector>

#include "urysohn/problems.hpp"
#include "urysohn/solvers.hpp"

namespace {

using namespace urysohn;

const UrysohnProblem& problem() {
  static const UrysohnProblem prob = reciprocal_sum_problem();
  return prob;
}

void BM_GaussLegendre(benchmark::State& state) {
  const int rho = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(rho));
}
BENCHMARK(BM_GaussLegendre)->Arg(2)->Arg(10)->Arg(20);

void BM_NystromApply(benchmark::State& state) {
  const auto quad = composite(gauss_legendre(2), static_cast<int>(state.range(0)));
  const std::vector<double> x(quad.size(), 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(nystrom_apply(problem(), quad, x, quad.nodes()));
  state.SetComplexityN(quad.size());
}
BENCHMARK(BM_NystromApply)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);

void BM_SolveNystrom(benchmark::State& state) {
  const auto quad = composite(gauss_legendre(2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_nystrom(problem(), quad));
}
BENCHMARK(BM_SolveNystrom)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

// Midpoint collocation with a fixed 256-interval quadrature.
void BM_ModifiedProjectionMidpoint(benchmark::State& state) {
  const auto quad = composite(gauss_legendre(2), 256);
  const CollocationGrid grid(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_modified_projection(problem(), quad, grid));
}
BENCHMARK(BM_ModifiedProjectionMidpoint)->RangeMultiplier(2)->Range(2, 32)->Unit(benchmark::kMillisecond);

// Two Gauss points with m = n^2.
void BM_ModifiedProjectionSquare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto quad = composite(gauss_legendre(2), n * n);
  const CollocationGrid grid(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_modified_projection(problem(), quad, grid));
}
BENCHMARK(BM_ModifiedProjectionSquare)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
