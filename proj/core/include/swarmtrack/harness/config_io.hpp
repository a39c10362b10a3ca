#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swarmtrack/config.hpp"

namespace swarmtrack::harness {

/// One sweep dimension. With several parameters the values are zipped: point
/// p sets params[i] = values[p][i] (for example, fast and slow counts that
/// must sum to a fixed swarm size).
struct Axis {
  std::vector<std::string> params;
  std::vector<std::vector<double>> values;
};

struct SweepSpec {
  std::string name;
  SimConfig base;
  std::vector<Axis> axes;
  int replicates = 5;
};

using LoadedConfig = std::variant<SimConfig, SweepSpec>;

/// Parses a YAML config. A document with a `sweep` section yields a
/// SweepSpec, anything else a SimConfig. Unknown keys, type errors and
/// constraint violations raise ConfigError naming the offending key.
LoadedConfig parse_config(std::string_view yaml_text);
LoadedConfig load_config(const std::filesystem::path& path);

/// Full YAML echo of a config (every defaulted value spelled out).
std::string dump_config(const SimConfig& config);
std::string dump_sweep(const SweepSpec& spec);

/// Dotted parameter paths used by sweep axes and CSV columns, e.g.
/// `arena.side_length`, `targets.count`, `classes.fast.k`, `classes.*.t_mem`.
void set_parameter(SimConfig& config, std::string_view path, double value);
double get_parameter(const SimConfig& config, std::string_view path);

}  // namespace swarmtrack::harness
