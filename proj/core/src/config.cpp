#include "swarmtrack/config.hpp"

#include <cmath>
#include <set>

namespace swarmtrack {

int SimConfig::agent_count() const noexcept {
  int n = 0;
  for (const auto& cls : classes) {
    n += cls.count;
  }
  return n;
}

double SimConfig::density() const noexcept {
  return agent_count() / (arena.side_length * arena.side_length);
}

namespace {

void require(bool condition, const std::string& key, const std::string& message) {
  if (!condition) {
    throw ConfigError(key, message);
  }
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const SimConfig& config) {
  require(positive_finite(config.arena.side_length), "arena.side_length", "must be a finite value > 0");
  require(!config.classes.empty(), "classes", "at least one agent class is required");

  const int n = config.agent_count();
  require(n >= 2, "classes", "total agent count N must be >= 2 (got " + std::to_string(n) + ")");

  std::set<std::string> names;
  for (const auto& cls : config.classes) {
    const std::string prefix = "classes." + cls.name;
    require(!cls.name.empty(), "classes", "class name must not be empty");
    require(names.insert(cls.name).second, prefix, "duplicate class name");
    require(cls.count >= 0, prefix + ".count", "must be >= 0");
    require(positive_finite(cls.v_max), prefix + ".v_max", "must be a finite value > 0");
    require(cls.k >= 1 && cls.k <= n - 1, prefix + ".k",
            "k must lie in [1, N-1] = [1, " + std::to_string(n - 1) + "] (got " + std::to_string(cls.k) + ")");
    require(cls.t_mem >= 0, prefix + ".t_mem", "must be >= 0");
  }

  require(config.target_count >= 0, "targets.count", "must be >= 0");
  const auto& tp = config.target;
  require(std::isfinite(tp.v_max) && tp.v_max >= 0.0, "targets.v_max", "must be a finite value >= 0");
  require(positive_finite(tp.rho), "targets.rho", "must be a finite value > 0");
  require(positive_finite(tp.a_r), "targets.a_r", "must be a finite value > 0");
  require(tp.d >= 1, "targets.d", "must be >= 1");
  require(tp.t_limit >= 1, "targets.t_limit", "must be >= 1");
  require(tp.t_evade >= 1, "targets.t_evade", "must be >= 1");
  require(positive_finite(tp.waypoint_tolerance), "targets.waypoint_tolerance", "must be a finite value > 0");

  const auto& sp = config.strategy;
  require(std::isfinite(sp.omega), "strategy.omega", "must be finite");
  require(std::isfinite(sp.c), "strategy.c", "must be finite");
  require(positive_finite(sp.a_r), "strategy.a_r", "must be a finite value > 0");
  require(sp.d >= 1, "strategy.d", "must be >= 1");
  require(std::isfinite(sp.gamma_track) && sp.gamma_track >= 0.0 && sp.gamma_track <= 1.0,
          "strategy.gamma_track", "must lie in [0, 1]");

  require(config.n_steps >= 1, "steps", "must be >= 1");
  require(config.burn_in >= 0 && config.burn_in < config.n_steps, "burn_in", "must lie in [0, steps)");
  require(config.series_every >= 0, "series_every", "must be >= 0");

  // Targets must fit with 2*rho separation; a generous area check catches hopeless layouts.
  if (config.target_count > 1) {
    const double side = config.arena.side_length;
    const double spacing = 2.0 * tp.rho;
    const double per_axis = std::floor(side / spacing) + 1.0;
    require(per_axis * per_axis >= config.target_count, "targets.count",
            "too many targets to place with 2*rho separation in the arena");
  }
}

std::vector<int> agent_class_indices(const SimConfig& config) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(config.agent_count()));
  for (std::size_t c = 0; c < config.classes.size(); ++c) {
    for (int i = 0; i < config.classes[c].count; ++i) {
      out.push_back(static_cast<int>(c));
    }
  }
  return out;
}

const char* to_string(Placement placement) noexcept {
  switch (placement) {
    case Placement::uniform:
      return "uniform";
    case Placement::grid:
      return "grid";
  }
  return "uniform";
}

Placement placement_from_string(const std::string& text) {
  if (text == "uniform") return Placement::uniform;
  if (text == "grid") return Placement::grid;
  throw ConfigError("placement", "expected 'uniform' or 'grid', got '" + text + "'");
}

}  // namespace swarmtrack
