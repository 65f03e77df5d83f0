#include <benchmark/benchmark.h>

#include <random>

#include "cutcell/cutcell.hpp"

using namespace cutcell;

namespace {

constexpr AdvectionConfig kConfig{1.0, 0.4};

CutCellMesh mesh_for(const benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return build_mesh(n, 0.001, static_cast<double>(n / 2) / static_cast<double>(n));
}

PiecewiseConstantState random_state(const CutCellMesh& mesh) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXd v(static_cast<Eigen::Index>(mesh.size()));
  for (auto& x : v) x = dist(rng);
  return {v, 0.0};
}

void BM_AssembleDod(benchmark::State& state) {
  const auto mesh = mesh_for(state);
  const double eta = 1.0 - 0.001 / 0.4;
  for (auto _ : state) benchmark::DoNotOptimize(assemble_dod(mesh, kConfig, eta));
}
BENCHMARK(BM_AssembleDod)->RangeMultiplier(4)->Range(16, 1024);

void BM_Step(benchmark::State& state) {
  const auto mesh = mesh_for(state);
  const auto m = assemble_dod(mesh, kConfig, 1.0 - 0.001 / 0.4);
  auto u = random_state(mesh);
  for (auto _ : state) {
    u = step(u, m);
    benchmark::DoNotOptimize(u.values.data());
  }
}
BENCHMARK(BM_Step)->RangeMultiplier(4)->Range(16, 1024);

void BM_AdvectAndAverage(benchmark::State& state) {
  const auto mesh = mesh_for(state);
  const double shift = kConfig.dt(mesh);
  auto u = random_state(mesh);
  for (auto _ : state) {
    u = advect_and_average(u, mesh, shift);
    benchmark::DoNotOptimize(u.values.data());
  }
}
BENCHMARK(BM_AdvectAndAverage)->RangeMultiplier(4)->Range(16, 1024);

void BM_CheckMonotonicity(benchmark::State& state) {
  const auto mesh = mesh_for(state);
  const auto m = assemble_unstabilized(mesh, kConfig);
  for (auto _ : state) benchmark::DoNotOptimize(check_monotonicity(m));
}
BENCHMARK(BM_CheckMonotonicity)->RangeMultiplier(4)->Range(16, 1024);

void BM_GhostPenaltyFeasibility(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ghost_penalty_feasibility(0.001, 0.4));
}
BENCHMARK(BM_GhostPenaltyFeasibility);

}  // namespace

BENCHMARK_MAIN();
