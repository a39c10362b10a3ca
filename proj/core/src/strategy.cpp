#include "swarmtrack/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace swarmtrack {

void Memory::merge(const Observation& obs) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), obs.target,
                             [](const Observation& e, int target) { return e.target < target; });
  if (it == entries_.end() || it->target != obs.target) {
    entries_.insert(it, obs);
  } else if (obs.timestamp > it->timestamp) {
    *it = obs;
  }
}

void Memory::purge(std::int64_t t, int t_mem) {
  std::erase_if(entries_, [&](const Observation& e) { return t - e.timestamp > t_mem; });
}

const Observation* Memory::find(int target) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), target,
                             [](const Observation& e, int tgt) { return e.target < tgt; });
  return it != entries_.end() && it->target == target ? &*it : nullptr;
}

AgentState update_memory(AgentState agent, std::span<const Observation> own_detections,
                         std::span<const Observation> neighbor_memories, std::int64_t t, int t_mem) {
  for (const auto& obs : own_detections) {
    agent.memory.merge(obs);
  }
  for (const auto& obs : neighbor_memories) {
    agent.memory.merge(obs);
  }
  agent.memory.purge(t, t_mem);
  agent.tracking = !agent.memory.empty();
  return agent;
}

std::optional<Observation> select_attraction(const AgentState& agent) {
  const Observation* best = nullptr;
  double best_d2 = 0.0;
  for (const auto& obs : agent.memory.entries()) {
    const double d2 = distance_sq(obs.position, agent.position);
    // Entries are visited in ascending target order, so strict comparisons
    // already prefer the lower index on a full tie.
    if (best == nullptr || d2 < best_d2 || (d2 == best_d2 && obs.timestamp > best->timestamp)) {
      best = &obs;
      best_d2 = d2;
    }
  }
  if (best == nullptr) {
    return std::nullopt;
  }
  return *best;
}

std::optional<Vec2> select_attraction_point(const AgentState& agent) {
  if (auto obs = select_attraction(agent)) {
    return obs->position;
  }
  return std::nullopt;
}

Vec2 attraction_velocity(const AgentState& agent, const std::optional<Vec2>& point, double eps,
                         const StrategyParams& params) {
  Vec2 v = params.omega * agent.velocity;
  if (point) {
    v += (params.c * eps) * (*point - agent.position);
  }
  return v;
}

Vec2 random_unit(SplitMix64& rng) noexcept {
  const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {std::cos(angle), std::sin(angle)};
}

namespace {

inline double int_pow(double base, int exponent) noexcept {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
  }
  return out;
}

/// Contribution of a single neighbor at offset r (agent -> neighbor), before
/// the leading minus sign and gain.
inline Vec2 repulsion_term(const Vec2& r, double a_r, int d, SplitMix64& rng) {
  const double dist = r.norm();
  if (dist == 0.0) {
    // Pointing the "toward neighbor" vector randomly; the caller negates it.
    return random_unit(rng);
  }
  const double strength = int_pow(a_r / dist, d);
  return (strength / dist) * r;
}

}  // namespace

Vec2 repulsion_velocity(const Vec2& position, std::span<const Vec2> neighbor_positions,
                        const StrategyParams& params, bool tracking, SplitMix64& rng) {
  Vec2 sum;
  for (const auto& q : neighbor_positions) {
    sum += repulsion_term(q - position, params.a_r, params.d, rng);
  }
  const double gain = tracking ? params.gamma_track : 1.0;
  return -gain * sum;
}

void agent_step(const AgentState& agent, const AgentPerception& perception, const AgentClass& cls,
                const StrategyParams& params, const ArenaConfig& arena, std::int64_t t,
                SplitMix64& rng, AgentState& out) {
  out.class_index = agent.class_index;
  out.position = agent.position;
  out.velocity = agent.velocity;
  out.memory = agent.memory;
  for (const auto& obs : perception.detections) {
    out.memory.merge(obs);
  }
  for (const AgentState* neighbor : perception.neighbors) {
    for (const auto& obs : neighbor->memory.entries()) {
      out.memory.merge(obs);
    }
  }
  out.memory.purge(t, cls.t_mem);
  out.tracking = !out.memory.empty();

  const double eps = rng.uniform();
  const Vec2 v_att = attraction_velocity(out, select_attraction_point(out), eps, params);

  Vec2 sum;
  for (const AgentState* neighbor : perception.neighbors) {
    sum += repulsion_term(neighbor->position - agent.position, params.a_r, params.d, rng);
  }
  const double gain = out.tracking ? params.gamma_track : 1.0;
  const Vec2 v_rep = -gain * sum;

  const Vec2 v = normalize_to_speed(v_att + v_rep, cls.v_max);
  const auto clamped = clamp_to_arena_axes(agent.position + v, arena);
  out.velocity = v;
  out.position = clamped.position;
  if (params.reflect_at_walls) {
    if (clamped.hit_x) out.velocity.x = -out.velocity.x;
    if (clamped.hit_y) out.velocity.y = -out.velocity.y;
  }
}

AgentState agent_step(const AgentState& agent, const AgentPerception& perception,
                      const AgentClass& cls, const StrategyParams& params,
                      const ArenaConfig& arena, std::int64_t t, SplitMix64& rng) {
  AgentState out;
  agent_step(agent, perception, cls, params, arena, t, rng, out);
  return out;
}

}  // namespace swarmtrack
