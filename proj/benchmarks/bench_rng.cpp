#include <benchmark/benchmark.h>

#include <vector>

#include "dislab/rng.hpp"

using namespace dislab;

static void BM_Philox(benchmark::State& state) {
  const rng::Key key = rng::derive_key({42, 0});
  rng::Block counter{0, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng::philox2x64(counter, key));
    ++counter[0];
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Philox);

static void BM_StandardNormalPair(benchmark::State& state) {
  const rng::Key key = rng::derive_key({42, 0});
  std::uint64_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rng::standard_normal_pair(key, rng::Domain::agent, index++, 7));
  }
  state.SetItemsProcessed(2 * state.iterations());
}
BENCHMARK(BM_StandardNormalPair);

static void BM_StandardNormalsBatch(benchmark::State& state) {
  const rng::Key key = rng::derive_key({42, 0});
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> a(n), b(n);
  std::uint64_t period = 0;
  for (auto _ : state) {
    rng::standard_normals(key, rng::Domain::agent, 0, period++, a, b);
    benchmark::DoNotOptimize(a.data());
    benchmark::DoNotOptimize(b.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(2 * n) * state.iterations());
}
BENCHMARK(BM_StandardNormalsBatch)->Arg(4096)->Arg(65536);
