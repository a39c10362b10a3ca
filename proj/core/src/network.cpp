#include "swarmtrack/network.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "swarmtrack/config.hpp"

namespace swarmtrack {

void TopologyBuilder::build(std::span<const Vec2> positions, std::span<const int> k_per_agent,
                            Topology& out) {
  const std::size_t n = positions.size();
  if (n < 2) {
    throw ConfigError("classes", "a topology needs at least 2 agents");
  }
  if (k_per_agent.size() != n) {
    throw ConfigError("classes", "k_per_agent has " + std::to_string(k_per_agent.size()) +
                                     " entries for " + std::to_string(n) + " agents");
  }

  // The previous lists are usable as a search bound only if every agent keeps its k.
  const bool warm = out.size() == n && std::equal(k_per_agent.begin(), k_per_agent.end(),
                                                  last_k_.begin(), last_k_.end());

  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int k = k_per_agent[i];
    if (k < 1 || static_cast<std::size_t>(k) > n - 1) {
      throw ConfigError("k", "agent " + std::to_string(i) + " has k = " + std::to_string(k) +
                                 " outside [1, N-1] = [1, " + std::to_string(n - 1) + "]");
    }
    total += static_cast<std::size_t>(k);
  }
  if (!warm) {
    out.offsets_.resize(n + 1);
    out.offsets_[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      out.offsets_[i + 1] = out.offsets_[i] + static_cast<std::size_t>(k_per_agent[i]);
    }
    out.flat_.resize(total);
    last_k_.assign(k_per_agent.begin(), k_per_agent.end());
  }

  dist_sq_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    dist_sq_[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d2 = distance_sq(positions[i], positions[j]);
      dist_sq_[i * n + j] = d2;
      dist_sq_[j * n + i] = d2;
    }
  }

  row_.resize(n - 1);
  candidates_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(k_per_agent[i]);
    const double* row = dist_sq_.data() + i * n;
    auto* dst = out.flat_.data() + out.offsets_[i];

    // Any k agents within radius r bound the k-th nearest distance by r, so
    // every true neighbor (ties included) has distance <= bound.
    double bound;
    if (warm) {
      bound = 0.0;
      for (std::size_t m = 0; m < k; ++m) {
        bound = std::max(bound, row[dst[m]]);
      }
    } else if (k == n - 1) {
      bound = std::numeric_limits<double>::infinity();
    } else {
      std::copy(row, row + i, row_.begin());
      std::copy(row + i + 1, row + n, row_.begin() + static_cast<std::ptrdiff_t>(i));
      const auto kth = row_.begin() + static_cast<std::ptrdiff_t>(k - 1);
      std::nth_element(row_.begin(), kth, row_.end());
      bound = *kth;
    }

    candidates_.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && row[j] <= bound) {
        candidates_.emplace_back(row[j], static_cast<std::uint32_t>(j));
      }
    }
    // (distance, index) ordering: ties resolve to the lower index.
    std::sort(candidates_.begin(), candidates_.end());
    for (std::size_t m = 0; m < k; ++m) {
      dst[m] = candidates_[m].second;
    }
  }
}

Topology build_topology(std::span<const Vec2> positions, std::span<const int> k_per_agent) {
  Topology topology;
  TopologyBuilder{}.build(positions, k_per_agent, topology);
  return topology;
}

}  // namespace swarmtrack
