// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "ferri/sweep.hpp"
#include "ferri/thermal.hpp"

using namespace ferri;

namespace {

SweepConfig ring_sweep() {
  SweepConfig cfg;
  cfg.twice_s_list = {TwiceSpin(1), TwiceSpin(2), TwiceSpin(3)};
  cfg.cells = 2;
  cfg.boundary = Boundary::ring;
  cfg.t_steps = 20;
  return cfg;
}

void BM_DecomposeDense(benchmark::State& state) {
  const auto h = build_hamiltonian(ChainSpec::ring(static_cast<int>(state.range(0)), TwiceSpin(2)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_dense(h.matrix));
}

void BM_DecomposeBlocked(benchmark::State& state) {
  const auto h = build_hamiltonian(ChainSpec::ring(static_cast<int>(state.range(0)), TwiceSpin(2)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(h));
}

void BM_SweepReference(benchmark::State& state) {
  const auto cfg = ring_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_reference(cfg));
}

void BM_Sweep(benchmark::State& state) {
  const auto cfg = ring_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_DecomposeDense)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeBlocked)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
