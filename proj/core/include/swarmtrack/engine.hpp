#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swarmtrack/config.hpp"
#include "swarmtrack/network.hpp"
#include "swarmtrack/strategy.hpp"
#include "swarmtrack/target.hpp"

namespace swarmtrack {

/// 1 iff some agent lies within `rho` of the target (boundary inclusive).
int coverage(const TargetState& target, std::span<const Vec2> agent_positions, double rho);

struct Snapshot {
  std::int64_t t = 0;
  std::vector<AgentState> agents;
  std::vector<TargetState> targets;
};

struct SeriesPoint {
  std::int64_t t = 0;
  int covered = 0;  // targets covered at step t
  int engaged = 0;  // agents in the tracking state at step t

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Running sums behind the tracking performance (time- and target-averaged
/// coverage) and the engagement ratio (time- and agent-averaged S_i).
class MetricAccumulator {
 public:
  MetricAccumulator(int n_agents, int n_targets);

  void record(std::span<const int> target_coverage, int engaged_agents);

  [[nodiscard]] std::int64_t steps() const noexcept { return steps_; }
  [[nodiscard]] bool xi_defined() const noexcept { return n_targets_ > 0 && steps_ > 0; }
  /// 0 when there are no targets (see xi_defined()).
  [[nodiscard]] double xi() const noexcept;
  [[nodiscard]] double theta() const noexcept;
  [[nodiscard]] std::vector<double> per_target_xi() const;

 private:
  int n_agents_;
  int n_targets_;
  std::int64_t steps_ = 0;
  std::vector<std::int64_t> covered_steps_;
  std::int64_t engaged_sum_ = 0;
};

struct RunResult {
  double xi = 0.0;
  double theta = 0.0;
  bool xi_defined = true;
  std::vector<double> per_target_xi;
  std::vector<SeriesPoint> series;
  Snapshot final_snapshot;
  SimConfig config;  // echo, including the seed
};

/// Receives the committed state after every step.
class FrameSink {
 public:
  virtual ~FrameSink() = default;
  virtual void on_frame(const Snapshot& snapshot, std::span<const int> target_coverage) = 0;
};

/// A seeded run advanced one synchronous step at a time.
///
/// Each step reads the time-t snapshot only: the topology is built from
/// current positions, every agent and target transitions on that snapshot,
/// and the new state is committed at once. Metrics are sampled after the
/// commit. Random draws come from substreams keyed by (seed, step, entity),
/// so identical configs give bit-identical runs.
class Simulation {
 public:
  /// Validates the config (ConfigError) and places agents and targets.
  explicit Simulation(SimConfig config);

  void step();
  void run(FrameSink* frames = nullptr);

  [[nodiscard]] const SimConfig& config() const noexcept { return config_; }
  [[nodiscard]] const Snapshot& snapshot() const noexcept { return current_; }
  [[nodiscard]] const Topology& topology() const noexcept { return topology_; }
  [[nodiscard]] std::span<const int> last_coverage() const noexcept { return coverage_; }
  [[nodiscard]] const MetricAccumulator& metrics() const noexcept { return metrics_; }
  [[nodiscard]] bool finished() const noexcept { return current_.t >= config_.n_steps; }

  [[nodiscard]] RunResult result() const;

 private:
  void place_agents();

  SimConfig config_;
  std::vector<int> k_per_agent_;
  Snapshot current_;
  Snapshot next_;
  TopologyBuilder topology_builder_;
  Topology topology_;
  MetricAccumulator metrics_;
  std::vector<int> coverage_;
  std::vector<SeriesPoint> series_;

  // Per-step scratch.
  std::vector<Vec2> agent_positions_;
  std::vector<Vec2> target_positions_;
  std::vector<Vec2> other_targets_;
  std::vector<Observation> detections_;
  std::vector<const AgentState*> neighbor_refs_;
};

RunResult run_simulation(const SimConfig& config, FrameSink* frames = nullptr);

/// Coefficient of variation (sd / mean) of each agent's nearest-neighbor distance.
double nearest_neighbor_cv(std::span<const Vec2> positions);

}  // namespace swarmtrack
