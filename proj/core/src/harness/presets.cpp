#include "swarmtrack/harness/presets.hpp"

#include <stdexcept>
#include <variant>

namespace swarmtrack::harness {

SweepSpec Preset::spec() const {
  auto loaded = parse_config(yaml);
  if (auto* sweep = std::get_if<SweepSpec>(&loaded)) {
    return *sweep;
  }
  throw std::logic_error("preset '" + name + "' has no sweep section");
}

const std::vector<Preset>& builtin_presets() {
  static const std::vector<Preset> presets = {
      {"connectivity", "connectivity",
       "Xi and Theta against k for 50 slow agents and for 45 fast + 5 slow",
       R"(name: connectivity
classes:
  - {name: slow, count: 50}
  - {name: fast, count: 0}
sweep:
  replicates: 5
  axes:
    - params: [classes.slow.count, classes.fast.count]
      values: [[50, 0], [5, 45]]
    - param: classes.*.k
      values: [2, 6, 10, 14, 18, 22, 30, 40, 49]
)"},
      {"connectivity-targets", "connectivity",
       "Xi and Theta against k for one to three targets (homogeneous slow swarm)",
       R"(name: connectivity-targets
classes:
  - {name: slow, count: 50}
sweep:
  replicates: 5
  axes:
    - param: targets.count
      values: [1, 2, 3]
    - param: classes.*.k
      values: [2, 6, 10, 14, 18, 22, 30]
)"},
      {"memory", "memory", "Xi and Theta against memory length, 50 slow agents at k=14",
       R"(name: memory
classes:
  - {name: slow, count: 50, k: 14}
sweep:
  replicates: 5
  axes:
    - param: classes.*.t_mem
      values: [0, 5, 10, 20, 35, 50]
)"},
      {"composition", "composition", "Xi and Theta against the number of fast agents in a 50-agent swarm",
       R"(name: composition
classes:
  - {name: slow, count: 50, k: 12}
  - {name: fast, count: 0, k: 12}
sweep:
  replicates: 5
  axes:
    - params: [classes.slow.count, classes.fast.count]
      values: [[50, 0], [40, 10], [30, 20], [20, 30], [10, 40], [0, 50]]
)"},
      {"density", "density",
       "Xi against swarm density (arena side) for 50 slow agents and 30-agent mixed swarms",
       R"(name: density
classes:
  - {name: slow, count: 50, k: 14}
  - {name: fast, count: 0, k: 14}
sweep:
  replicates: 5
  axes:
    - params: [classes.slow.count, classes.fast.count]
      values: [[50, 0], [20, 10], [10, 20]]
    - param: arena.side_length
      values: [7, 10, 15, 20, 30, 45]
)"},
      {"targets", "targets", "Xi and Theta against the number of targets at k=12",
       R"(name: targets
classes:
  - {name: slow, count: 50, k: 12}
sweep:
  replicates: 5
  axes:
    - param: targets.count
      values: [1, 2, 3]
)"},
      {"differentiated-k", "differentiated-k",
       "30 slow + 10 fast agents with separate k for each class",
       R"(name: differentiated-k
classes:
  - {name: slow, count: 30}
  - {name: fast, count: 10}
sweep:
  replicates: 5
  axes:
    - param: classes.fast.k
      values: [2, 6, 10, 14, 18]
    - param: classes.slow.k
      values: [2, 6, 10, 14, 18]
)"},
      {"memory-speed", "memory-speed",
       "Homogeneous swarms at k=14 with different agent speeds and memory lengths",
       R"(name: memory-speed
classes:
  - {name: slow, count: 50, k: 14}
sweep:
  replicates: 5
  axes:
    - param: classes.slow.v_max
      values: [0.1, 0.18, 0.26]
    - param: classes.*.t_mem
      values: [0, 5, 10, 20, 35, 50]
)"},
  };
  return presets;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : builtin_presets()) {
    if (p.name == name) {
      return p;
    }
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace swarmtrack::harness
