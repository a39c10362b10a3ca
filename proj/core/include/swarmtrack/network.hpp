#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "swarmtrack/vec2.hpp"

namespace swarmtrack {

/// Directed k-nearest-neighbor graph for one time step. Agent i reads the
/// state of every agent listed in `neighbors(i)`, nearest first.
class Topology {
 public:
  [[nodiscard]] std::size_t size() const noexcept {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }

  [[nodiscard]] std::span<const std::uint32_t> neighbors(std::size_t i) const noexcept {
    return {flat_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

 private:
  friend class TopologyBuilder;

  std::vector<std::uint32_t> flat_;
  std::vector<std::size_t> offsets_;
};

/// Rebuilds topologies in place, reusing scratch storage across steps.
///
/// Ties in distance go to the lower agent index so the graph depends only on
/// the positions. Construction is O(N^2) per step, fine for swarms of a few
/// hundred agents. When `out` already holds a topology of the same shape
/// (the previous step), its neighbor lists bound the search radius; the
/// result is identical either way.
class TopologyBuilder {
 public:
  /// Throws ConfigError when positions.size() < 2 or any k is outside [1, N-1].
  void build(std::span<const Vec2> positions, std::span<const int> k_per_agent, Topology& out);

 private:
  std::vector<double> dist_sq_;  // row-major N x N
  std::vector<double> row_;
  std::vector<int> last_k_;
  std::vector<std::pair<double, std::uint32_t>> candidates_;
};

Topology build_topology(std::span<const Vec2> positions, std::span<const int> k_per_agent);

}  // namespace swarmtrack
