#include <benchmark/benchmark.h>

#include "dislab/dynamics.hpp"
#include "dislab/moments.hpp"

using namespace dislab;

namespace {
const ModelParams kParams{0.9, 1.0, 0.5, 1.0, 0.5, 2.0};
}

static void BM_AdvancePanel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PanelState panel = make_panel(n, {0.0, 2.0 / 3.0, 0.0}, PanelSeeds::from({42, 0}));
  for (auto _ : state) {
    advance_panel(panel, kParams, 1);
    benchmark::DoNotOptimize(panel.beliefs.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(n) * state.iterations());
}
BENCHMARK(BM_AdvancePanel)->Arg(10'000)->Arg(100'000);

static void BM_Snapshot(benchmark::State& state) {
  const PanelState panel = make_panel(100'000, {0.0, 1.0, 0.0}, PanelSeeds::from({42, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(snapshot(panel));
  state.SetItemsProcessed(100'000 * state.iterations());
}
BENCHMARK(BM_Snapshot);

static void BM_SteadyStateMoments(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stationary_joint_moments(kParams));
}
BENCHMARK(BM_SteadyStateMoments);
