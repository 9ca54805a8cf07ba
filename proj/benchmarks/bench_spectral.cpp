#include <benchmark/benchmark.h>

#include "ealpha/dynamics.hpp"
#include "ealpha/initial_conditions.hpp"
#include "ealpha/integrators.hpp"
#include "ealpha/lagrangian.hpp"
#include "ealpha/spectral.hpp"

namespace {

using namespace ealpha;

SimState bench_state(int n) {
  RunConfig cfg;
  cfg.n = n;
  return make_initial_condition(cfg);
}

void BM_ForwardInverse(benchmark::State& state) {
  const SimState s = bench_state(static_cast<int>(state.range(0)));
  const PhysicalField field = inverse_transform(s.q_hat);
  for (auto _ : state) {
    SpectralField f = forward_transform(field);
    benchmark::DoNotOptimize(inverse_transform(f));
  }
}
BENCHMARK(BM_ForwardInverse)->Arg(64)->Arg(128)->Arg(256);

void BM_RhsVorticity(benchmark::State& state) {
  const SimState s = bench_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rhs_vorticity(s));
}
BENCHMARK(BM_RhsVorticity)->Arg(64)->Arg(128)->Arg(256);

void BM_AdStar(benchmark::State& state) {
  const SimState s = bench_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ad_star_spectral(s));
}
BENCHMARK(BM_AdStar)->Arg(64)->Arg(128);

void BM_StepRk4(benchmark::State& state) {
  SimState s = bench_state(static_cast<int>(state.range(0)));
  for (auto _ : state) s = step_rk4(s, 1e-3);
}
BENCHMARK(BM_StepRk4)->Arg(64)->Arg(128)->Arg(256);

void BM_StepStrang(benchmark::State& state) {
  SimState s = bench_state(64);
  s.nu = 0.01;
  for (auto _ : state) s = step_strang(s, 1e-3);
}
BENCHMARK(BM_StepStrang);

void BM_EvalVelocityAt(benchmark::State& state) {
  const SimState s = bench_state(64);
  const SpectralVector u = velocity_spectral_from_q(s.q_hat, s.alpha);
  const ParticleMap pm = ParticleMap::lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_velocity_at(u, pm.positions()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pm.positions().size()));
}
BENCHMARK(BM_EvalVelocityAt)->Arg(32)->Arg(64);

void BM_JacobianDeterminant(benchmark::State& state) {
  const ParticleMap pm = ParticleMap::lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_determinant(pm));
}
BENCHMARK(BM_JacobianDeterminant)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
