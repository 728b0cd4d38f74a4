#include <benchmark/benchmark.h>

#include <cmath>

#include "adiabatic/adiabatic.hpp"

using namespace adiabatic;

namespace {

void BM_SolveGroundEven(benchmark::State& state) {
  const auto dp = DimensionlessParams::from_alpha(10.0, 0.0, 2.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_ground_auto(dp, n).energy);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveGroundEven)->Arg(501)->Arg(1001)->Arg(2001)->Arg(4001)->Arg(8001)->Complexity();

void BM_SolveGroundBiased(benchmark::State& state) {
  const auto dp = DimensionlessParams::from_alpha(10.0, 0.1, 2.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_ground_auto(dp, n).energy);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveGroundBiased)->Arg(501)->Arg(1001)->Arg(2001)->Arg(4001)->Arg(8001)->Complexity();

void BM_BlochAndTangle(benchmark::State& state) {
  const auto dp = DimensionlessParams::from_alpha(10.0, 0.1, 2.0);
  const auto sol = solve_ground_auto(dp);
  for (auto _ : state) benchmark::DoNotOptimize(tangle(bloch_vector(dp, sol)).value);
}
BENCHMARK(BM_BlochAndTangle);

void BM_ExactGround(benchmark::State& state) {
  const auto dp = DimensionlessParams::from_alpha(10.0, 0.0, 2.0);
  const FockTruncation tr{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ground_state_exact(dp, tr).energy);
}
BENCHMARK(BM_ExactGround)->Arg(60)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_ConvergedExact(benchmark::State& state) {
  const auto dp = DimensionlessParams::from_alpha(static_cast<double>(state.range(0)), 0.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(converged_ground_state(dp).energy_shift);
}
BENCHMARK(BM_ConvergedExact)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ThermalBloch(benchmark::State& state) {
  ModelParams p;
  p.delta = 5.0;
  p.epsilon = 0.5;
  p.lambda = std::sqrt(10.0);
  const double beta = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(thermal_bloch({beta, p}).b_x());
}
BENCHMARK(BM_ThermalBloch)->Arg(1)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
