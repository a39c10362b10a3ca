#pragma once

#include <span>
#include <vector>

#include "swarmtrack/config.hpp"
#include "swarmtrack/rng.hpp"
#include "swarmtrack/vec2.hpp"

namespace swarmtrack {

enum class TargetMode { waypoint, repel, sprint };

const char* to_string(TargetMode mode) noexcept;

struct TargetState {
  Vec2 position;
  Vec2 waypoint;
  TargetMode mode = TargetMode::waypoint;
  int encounter_streak = 0;
  int sprint_remaining = 0;
  Vec2 sprint_heading;  // unit vector while sprinting

  friend bool operator==(const TargetState&, const TargetState&) = default;
};

/// Inverse-power repulsion of a target away from every agent within rho.
/// Returns the raw (unnormalized) vector and the number of agents counted.
struct TargetRepulsion {
  Vec2 velocity;
  int encounters = 0;
};

TargetRepulsion target_repulsion(const Vec2& position, std::span<const Vec2> agent_positions,
                                 const TargetParams& params, SplitMix64& rng);

/// One step of the evasive policy.
///
///  - sprinting: move v_max along the sprint heading (reflected at walls)
///    until the sprint runs out; agents are ignored.
///  - agents within rho: flee along the normalized repulsion. After t_limit
///    consecutive encounter steps, lock the current heading and sprint for
///    t_evade steps.
///  - otherwise: head for the waypoint, drawing a new one on arrival.
///
/// Other targets closer than 2*rho add a repulsion term so targets keep apart.
TargetState target_step(const TargetState& target, std::span<const Vec2> agent_positions,
                        std::span<const Vec2> other_targets, const TargetParams& params,
                        const ArenaConfig& arena, SplitMix64& rng);

/// Uniform spawn with pairwise separation >= 2*rho by rejection sampling.
/// Throws ConfigError if no layout is found.
std::vector<TargetState> spawn_targets(int count, const TargetParams& params,
                                       const ArenaConfig& arena, SplitMix64& rng);

}  // namespace swarmtrack
