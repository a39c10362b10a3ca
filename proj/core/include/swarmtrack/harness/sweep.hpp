#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "swarmtrack/config.hpp"
#include "swarmtrack/harness/config_io.hpp"
#include "swarmtrack/harness/csv.hpp"

namespace swarmtrack::harness {

/// One (grid point, replicate) cell of a sweep.
struct RunSpec {
  std::size_t point = 0;
  int replicate = 0;
  SimConfig config;
};

/// Cartesian product of the axes (first axis outermost) times replicates.
/// Seeds are base seed + replicate. Throws ConfigError when a grid point is
/// invalid.
std::vector<RunSpec> enumerate_runs(const SweepSpec& spec);

struct RunRecord {
  RunSpec spec;
  double xi = 0.0;
  bool xi_defined = false;
  double theta = 0.0;
  std::vector<double> per_target_xi;
  double wall_time_s = 0.0;
  std::string error;  // empty on success
};

struct SweepResult {
  std::vector<RunRecord> runs;  // sorted by (point, replicate)

  [[nodiscard]] std::size_t error_count() const;
};

struct SweepOptions {
  int parallelism = 1;
  /// Called from worker threads as runs complete (serialized by a mutex).
  std::function<void(const RunRecord&, std::size_t done, std::size_t total)> on_run_done;
};

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options);
SweepResult run_sweep(const SweepSpec& spec, int parallelism);

/// Column names and values that reconstruct a SimConfig: every parameter
/// (dotted paths, one group per agent class) plus derived n_agents, density
/// and composition.
std::vector<std::string> config_columns(const SimConfig& config);
std::vector<std::string> config_values(const SimConfig& config);
SimConfig config_from_row(const CsvTable& table, std::size_t row);

/// runs.csv: point, replicate, config columns, xi, xi_defined, theta,
/// per_target_xi (semicolon-joined), errors.
CsvTable runs_table(const SweepResult& result);
/// summary.csv: one row per grid point with mean and sample sd of xi and
/// theta over the successful replicates.
CsvTable summary_table(const SweepResult& result);
/// timings.csv: point, replicate, seed, wall_time_s. Kept apart from
/// runs.csv, whose bytes must not depend on scheduling.
CsvTable timings_table(const SweepResult& result);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample (n - 1); nan when n < 2
  std::size_t n = 0;
};
MeanSd mean_sd(const std::vector<double>& values);

}  // namespace swarmtrack::harness
