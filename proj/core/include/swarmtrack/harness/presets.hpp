#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swarmtrack/harness/config_io.hpp"

namespace swarmtrack::harness {

/// A named experiment family, stored as the YAML a user would write.
struct Preset {
  std::string name;
  std::string plot_family;
  std::string description;
  std::string yaml;

  [[nodiscard]] SweepSpec spec() const;
};

const std::vector<Preset>& builtin_presets();
/// Throws std::invalid_argument for an unknown name.
const Preset& find_preset(std::string_view name);

}  // namespace swarmtrack::harness
