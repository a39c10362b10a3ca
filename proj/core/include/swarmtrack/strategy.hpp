#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "swarmtrack/config.hpp"
#include "swarmtrack/rng.hpp"
#include "swarmtrack/vec2.hpp"

namespace swarmtrack {

/// A sighting of a target: where it was and at which step.
struct Observation {
  int target = 0;
  Vec2 position;
  std::int64_t timestamp = 0;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Short-term memory holding at most one observation per target, kept sorted
/// by target index.
class Memory {
 public:
  /// Keeps `obs` if it is strictly fresher than what is stored for its target.
  void merge(const Observation& obs);
  /// Drops entries older than `t_mem` steps at step `t`.
  void purge(std::int64_t t, int t_mem);
  void clear() noexcept { entries_.clear(); }

  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] std::span<const Observation> entries() const noexcept { return entries_; }
  [[nodiscard]] const Observation* find(int target) const noexcept;

  friend bool operator==(const Memory&, const Memory&) = default;

 private:
  std::vector<Observation> entries_;
};

struct AgentState {
  int class_index = 0;
  Vec2 position;
  Vec2 velocity;  // post-normalization velocity of the previous step
  Memory memory;
  bool tracking = false;  // S_i: holds a valid point of attraction

  friend bool operator==(const AgentState&, const AgentState&) = default;
};

/// Merges own detections and neighbor memories into the agent's memory
/// (freshest observation per target wins), expires entries older than
/// `t_mem`, and recomputes the tracking flag.
AgentState update_memory(AgentState agent, std::span<const Observation> own_detections,
                         std::span<const Observation> neighbor_memories, std::int64_t t, int t_mem);

/// The remembered observation nearest to the agent; distance ties go to the
/// fresher one, then to the lower target index.
std::optional<Observation> select_attraction(const AgentState& agent);
std::optional<Vec2> select_attraction_point(const AgentState& agent);

/// Inertia plus a randomly weighted pull toward the point of attraction:
/// omega * v[t-1] + c * eps * (p - x).
Vec2 attraction_velocity(const AgentState& agent, const std::optional<Vec2>& point, double eps,
                         const StrategyParams& params);

/// Inverse-power repulsion away from every supplied neighbor, scaled by
/// gamma_track while the agent is tracking. Coincident neighbors contribute a
/// unit push in a direction drawn from `rng`.
Vec2 repulsion_velocity(const Vec2& position, std::span<const Vec2> neighbor_positions,
                        const StrategyParams& params, bool tracking, SplitMix64& rng);

/// Everything an agent perceives at step t.
struct AgentPerception {
  std::span<const AgentState* const> neighbors;  // topological out-neighbors, time-t snapshot
  std::span<const Observation> detections;       // targets within rho at time t
};

/// One synchronous update of a single agent: memory, attraction point,
/// attraction + repulsion, speed normalization, clamped move. Writes into
/// `out` so the engine can reuse allocations; `out` must not alias `agent`.
void agent_step(const AgentState& agent, const AgentPerception& perception, const AgentClass& cls,
                const StrategyParams& params, const ArenaConfig& arena, std::int64_t t,
                SplitMix64& rng, AgentState& out);

AgentState agent_step(const AgentState& agent, const AgentPerception& perception,
                      const AgentClass& cls, const StrategyParams& params,
                      const ArenaConfig& arena, std::int64_t t, SplitMix64& rng);

/// Uniform random unit vector.
Vec2 random_unit(SplitMix64& rng) noexcept;

}  // namespace swarmtrack
