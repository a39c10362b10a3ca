#include <vector>

#include <benchmark/benchmark.h>

#include "swarmtrack/engine.hpp"
#include "swarmtrack/network.hpp"
#include "swarmtrack/rng.hpp"

namespace {

using namespace swarmtrack;

std::vector<Vec2> random_positions(std::size_t n, double side) {
  auto rng = substream(42, Stream::initialization, 0, 0);
  std::vector<Vec2> p(n);
  for (auto& v : p) {
    v = {rng.uniform(0.0, side), rng.uniform(0.0, side)};
  }
  return p;
}

void BM_TopologyColdBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto positions = random_positions(n, 30.0);
  const std::vector<int> k(n, static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_topology(positions, k));
  }
}
BENCHMARK(BM_TopologyColdBuild)->Args({50, 12})->Args({50, 49})->Args({200, 12});

// Rebuild on slightly perturbed positions, the per-step case.
void BM_TopologyWarmBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto positions = random_positions(n, 30.0);
  const std::vector<int> k(n, static_cast<int>(state.range(1)));
  TopologyBuilder builder;
  Topology topo;
  builder.build(positions, k, topo);
  auto rng = substream(7, Stream::agent, 0, 0);
  for (auto _ : state) {
    for (auto& p : positions) {
      p += Vec2{rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)};
    }
    builder.build(positions, k, topo);
    benchmark::DoNotOptimize(topo);
  }
}
BENCHMARK(BM_TopologyWarmBuild)->Args({50, 12})->Args({50, 49})->Args({200, 12});

void BM_SimulationStep(benchmark::State& state) {
  SimConfig config;
  config.classes = {{"slow", 45, 0.1, static_cast<int>(state.range(0)), 20},
                    {"fast", 5, 0.26, static_cast<int>(state.range(0)), 20}};
  config.n_steps = 1'000'000'000;
  Simulation sim(config);
  for (auto _ : state) {
    sim.step();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SimulationStep)->Arg(2)->Arg(12)->Arg(49);

}  // namespace
BENCHMARK_MAIN();
