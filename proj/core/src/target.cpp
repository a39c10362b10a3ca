#include "swarmtrack/target.hpp"

#include "swarmtrack/strategy.hpp"

namespace swarmtrack {

const char* to_string(TargetMode mode) noexcept {
  switch (mode) {
    case TargetMode::waypoint:
      return "WAYPOINT";
    case TargetMode::repel:
      return "REPEL";
    case TargetMode::sprint:
      return "SPRINT";
  }
  return "WAYPOINT";
}

namespace {

inline double int_pow(double base, int exponent) noexcept {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
  }
  return out;
}

Vec2 random_point(const ArenaConfig& arena, SplitMix64& rng) {
  const double x = rng.uniform(0.0, arena.side_length);
  const double y = rng.uniform(0.0, arena.side_length);
  return {x, y};
}

// Sum of (a_r / r)^d * r_hat over sources within `radius`, negated.
Vec2 repel_within(const Vec2& position, std::span<const Vec2> sources, double radius,
                  const TargetParams& params, SplitMix64& rng, int* count) {
  const double radius_sq = radius * radius;
  Vec2 sum;
  for (const auto& q : sources) {
    const Vec2 r = q - position;
    const double d2 = r.norm_sq();
    if (d2 > radius_sq) {
      continue;
    }
    if (count != nullptr) {
      ++*count;
    }
    const double dist = std::sqrt(d2);
    if (dist == 0.0) {
      sum += random_unit(rng);
      continue;
    }
    sum += (int_pow(params.a_r / dist, params.d) / dist) * r;
  }
  return -sum;
}

}  // namespace

TargetRepulsion target_repulsion(const Vec2& position, std::span<const Vec2> agent_positions,
                                 const TargetParams& params, SplitMix64& rng) {
  TargetRepulsion out;
  out.velocity = repel_within(position, agent_positions, params.rho, params, rng, &out.encounters);
  return out;
}

TargetState target_step(const TargetState& target, std::span<const Vec2> agent_positions,
                        std::span<const Vec2> other_targets, const TargetParams& params,
                        const ArenaConfig& arena, SplitMix64& rng) {
  TargetState next = target;

  if (target.mode == TargetMode::sprint && target.sprint_remaining > 0) {
    const auto clamped = clamp_to_arena_axes(target.position + params.v_max * target.sprint_heading, arena);
    next.position = clamped.position;
    if (clamped.hit_x) next.sprint_heading.x = -next.sprint_heading.x;
    if (clamped.hit_y) next.sprint_heading.y = -next.sprint_heading.y;
    next.sprint_remaining = target.sprint_remaining - 1;
    if (next.sprint_remaining == 0) {
      next.mode = TargetMode::waypoint;
    }
    return next;
  }

  const Vec2 spacing = repel_within(target.position, other_targets, 2.0 * params.rho, params, rng, nullptr);
  const auto flee = target_repulsion(target.position, agent_positions, params, rng);
  const Vec2 to_waypoint = normalize_to_speed(target.waypoint - target.position, 1.0);

  if (flee.encounters > 0) {
    Vec2 v = normalize_to_speed(flee.velocity + spacing, params.v_max);
    if (v.norm_sq() == 0.0) {
      // Perfectly balanced pursuers: keep moving rather than idle.
      v = normalize_to_speed(to_waypoint, params.v_max);
    }
    next.position = clamp_to_arena(target.position + v, arena);
    next.encounter_streak = target.encounter_streak + 1;
    if (params.redraw_waypoint_on_encounter) {
      next.waypoint = random_point(arena, rng);
    }
    if (next.encounter_streak >= params.t_limit) {
      next.mode = TargetMode::sprint;
      next.sprint_heading = normalize_to_speed(v, 1.0);
      if (next.sprint_heading.norm_sq() == 0.0) {
        next.sprint_heading = random_unit(rng);
      }
      next.sprint_remaining = params.t_evade;
      next.encounter_streak = 0;
    } else {
      next.mode = TargetMode::repel;
    }
    return next;
  }

  const Vec2 v = normalize_to_speed(to_waypoint + spacing, params.v_max);
  next.position = clamp_to_arena(target.position + v, arena);
  next.mode = TargetMode::waypoint;
  next.encounter_streak = 0;
  if (distance(next.position, target.waypoint) <= params.waypoint_tolerance) {
    next.waypoint = random_point(arena, rng);
  }
  return next;
}

std::vector<TargetState> spawn_targets(int count, const TargetParams& params, const ArenaConfig& arena,
                                       SplitMix64& rng) {
  constexpr int kMaxAttempts = 10'000;
  const double min_sep_sq = 4.0 * params.rho * params.rho;
  std::vector<TargetState> targets;
  targets.reserve(static_cast<std::size_t>(count));
  int attempts = 0;
  while (static_cast<int>(targets.size()) < count) {
    if (++attempts > kMaxAttempts) {
      throw ConfigError("targets.count", "could not place targets with 2*rho separation");
    }
    const Vec2 p = random_point(arena, rng);
    bool clear = true;
    for (const auto& other : targets) {
      if (distance_sq(p, other.position) < min_sep_sq) {
        clear = false;
        break;
      }
    }
    if (!clear) {
      continue;
    }
    TargetState t;
    t.position = p;
    t.waypoint = random_point(arena, rng);
    targets.push_back(t);
  }
  return targets;
}

}  // namespace swarmtrack
