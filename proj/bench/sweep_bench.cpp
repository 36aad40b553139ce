#include <benchmark/benchmark.h>

#include "cmm/presets.hpp"
#include "cmm/sweep.hpp"

namespace {

cmm::SweepSpec fig2a_spec(int n) {
  const cmm::Preset p = cmm::make_preset("fig2a");
  cmm::SweepSpec spec;
  spec.base = p.base;
  spec.axis1 = p.axis1;
  spec.axis2 = p.axis2;
  spec.axis1.count = n;
  spec.axis2->count = n;
  spec.pairs = p.pairs;
  return spec;
}

void BM_SweepSerial(benchmark::State& state) {
  const cmm::SweepSpec spec = fig2a_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cmm::run_sweep_serial(spec));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(spec.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const cmm::SweepSpec spec = fig2a_spec(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cmm::run_sweep(spec, workers));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(spec.size()));
}

void BM_SinglePoint(benchmark::State& state) {
  const cmm::SystemParams p = cmm::calibrated_params();
  const auto pairs = cmm::default_pairs();
  for (auto _ : state) benchmark::DoNotOptimize(cmm::evaluate_point(p, pairs));
}

}  // namespace

BENCHMARK(BM_SinglePoint);
BENCHMARK(BM_SweepSerial)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({41, 1})->Args({41, 2})->Args({41, 4})->Args({41, 0})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
