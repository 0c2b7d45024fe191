#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "kinspec/collision.hpp"
#include "kinspec/kernel_cache.hpp"
#include "kinspec/scenarios.hpp"
#include "kinspec/time_integration.hpp"

using namespace kinspec;

namespace {

std::vector<double> sample(const VelocityGrid& g) {
  auto f = maxwellian(g, 1.0, {0.4, -0.2, 0.0}, 0.8);
  for (std::size_t j = 0; j < g.size(); ++j) f[j] *= 1.0 + 0.3 * std::cos(g.velocity(j)[0]);
  return f;
}

void BM_ClassicalApply(benchmark::State& state) {
  VelocityGrid g(2, static_cast<int>(state.range(0)), 8.0);
  ClassicalCollision op(g, classical_table(g, {}, {}));
  const auto f = sample(g);
  std::vector<double> q(g.size());
  auto ws = op.make_workspace();
  for (auto _ : state) {
    op.apply(f, q, *ws);
    benchmark::DoNotOptimize(q.data());
  }
}
BENCHMARK(BM_ClassicalApply)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_FastApply(benchmark::State& state) {
  VelocityGrid g(2, static_cast<int>(state.range(0)), 8.0);
  FastKernelParams p;
  p.angles = static_cast<int>(state.range(1));
  FastCollision op(g, fast_table(g, p, {}));
  const auto f = sample(g);
  std::vector<double> q(g.size());
  auto ws = op.make_workspace();
  for (auto _ : state) {
    op.apply(f, q, *ws);
    benchmark::DoNotOptimize(q.data());
  }
}
BENCHMARK(BM_FastApply)
    ->ArgsProduct({{8, 16, 32, 64, 128}, {8}})
    ->Args({32, 16})
    ->Args({32, 32})
    ->Unit(benchmark::kMicrosecond);

void BM_FastTableBuild(benchmark::State& state) {
  VelocityGrid g(2, static_cast<int>(state.range(0)), 8.0);
  FastKernelParams p;
  for (auto _ : state) benchmark::DoNotOptimize(FastModeTable::build(g, p));
}
BENCHMARK(BM_FastTableBuild)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ImexStep(benchmark::State& state) {
  ScenarioConfig c = preset("trend");
  c.cells = {static_cast<int>(state.range(0)), 1};
  auto grid = make_velocity_grid(c);
  const SpatialMesh mesh = make_mesh(c);
  DistributionField f = initial_field(c, mesh, grid);
  FastKernelParams p;
  Stepper st(mesh, std::make_shared<FastCollision>(*grid, fast_table(*grid, p, {})), make_step_config(c));
  for (auto _ : state) st.step(f);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mesh.size()));
}
BENCHMARK(BM_ImexStep)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
