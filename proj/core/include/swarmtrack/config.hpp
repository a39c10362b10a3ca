#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swarmtrack/vec2.hpp"

namespace swarmtrack {

/// Configuration rejected by validation. `key()` names the offending field
/// using the same dotted path as the config file.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}

  [[nodiscard]] const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Capability bundle shared by every agent of one class.
struct AgentClass {
  std::string name;
  int count = 0;
  double v_max = 0.1;
  int k = 12;      // topological out-degree
  int t_mem = 20;  // memory length in steps
};

struct StrategyParams {
  double omega = 1.0;
  double c = 0.5;
  double a_r = 2.5;  // inter-agent repulsion strength
  int d = 2;         // repulsion exponent
  double gamma_track = 0.1;
  bool reflect_at_walls = true;  // flip the velocity component normal to a wall on contact
};

struct TargetParams {
  double v_max = 0.3;
  double rho = 1.0;  // detection and coverage radius
  double a_r = 1.0;
  int d = 2;
  int t_limit = 5;  // consecutive encounters before sprinting
  int t_evade = 20;
  double waypoint_tolerance = 0.5;
  bool redraw_waypoint_on_encounter = true;
};

enum class Placement { uniform, grid };

struct SimConfig {
  ArenaConfig arena{};
  std::vector<AgentClass> classes{{"slow", 50, 0.1, 12, 20}, {"fast", 0, 0.26, 12, 20}};
  int target_count = 1;
  TargetParams target{};
  StrategyParams strategy{};
  std::int64_t n_steps = 50'000;
  std::int64_t burn_in = 0;  // steps excluded from the metrics
  std::uint64_t seed = 0;
  Placement placement = Placement::uniform;
  std::int64_t series_every = 0;  // 0 disables the time series

  [[nodiscard]] int agent_count() const noexcept;
  [[nodiscard]] double density() const noexcept;
};

inline constexpr std::int64_t kDeskScaleSteps = 50'000;
inline constexpr std::int64_t kPaperScaleSteps = 400'000;

/// Throws ConfigError describing the first violated constraint.
void validate(const SimConfig& config);

/// Class index of every agent, in population order (class 0 first).
std::vector<int> agent_class_indices(const SimConfig& config);

const char* to_string(Placement placement) noexcept;
Placement placement_from_string(const std::string& text);

}  // namespace swarmtrack
