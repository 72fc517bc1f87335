#include <benchmark/benchmark.h>

#include <cmath>

#include "ddwave/simulation.hpp"
#include "ddwave/solitary_wave.hpp"
#include "ddwave/stability.hpp"

using namespace ddwave;

namespace {

const ModelParams kParams(2.0, 1.0, 3.0);

void BM_Rhs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WaveContext ctx(kParams, 0.8);
  const Grid grid(120.0, n);
  SpectralSolver solver(kParams, grid);
  const StatePair s = traveling_wave_state(ctx, grid);
  for (auto _ : state) benchmark::DoNotOptimize(solver.rhs(s));
}
BENCHMARK(BM_Rhs)->RangeMultiplier(2)->Range(256, 4096);

void BM_Rk4Step(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Grid grid(120.0, n);
  SpectralSolver solver(kParams, grid);
  SpectralSolver::Modes modes = solver.to_modes(traveling_wave_state(WaveContext(kParams, 0.8), grid));
  const double dt = default_time_step(kParams, grid);
  for (auto _ : state) {
    solver.step(modes, dt);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Rk4Step)->RangeMultiplier(2)->Range(256, 4096);

void BM_RootsInUnitInterval(benchmark::State& state) {
  double p = 1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(roots_in_unit_interval(p, 0.7));
    p = p > 11.0 ? 1.5 : p + 0.37;
  }
}
BENCHMARK(BM_RootsInUnitInterval);

void BM_ClassifyRegion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_region(7.0, 0.9));
}
BENCHMARK(BM_ClassifyRegion);

void BM_CriticalMu(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(critical_mu(8.0));
}
BENCHMARK(BM_CriticalMu);

void BM_Functionals(benchmark::State& state) {
  const WaveContext ctx(kParams, 0.5);
  const Grid grid(suggested_length(ctx), static_cast<std::size_t>(state.range(0)));
  const ProfileField field = profile_on_grid(ctx, grid);
  const double alpha = alpha_and_C(ctx).alpha;
  for (auto _ : state) benchmark::DoNotOptimize(functionals(field.values, grid, ctx, alpha));
}
BENCHMARK(BM_Functionals)->Arg(1024)->Arg(4096);

void BM_OrbitalDistance(benchmark::State& state) {
  const WaveContext ctx(kParams, 0.8);
  const Grid grid(120.0, 1024);
  const StatePair s = traveling_wave_state(ctx, grid);
  for (auto _ : state) benchmark::DoNotOptimize(orbital_distance(s, ctx, grid));
}
BENCHMARK(BM_OrbitalDistance);

}  // namespace
BENCHMARK_MAIN();
