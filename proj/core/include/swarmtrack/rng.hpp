#pragma once

#include <cstdint>
#include <limits>

namespace swarmtrack {

/// SplitMix64 generator. Small state, so a fresh one per (seed, step, entity)
/// is cheap, which keeps runs independent of the order entities are updated in.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of resolution. Used instead of
  /// std::uniform_real_distribution so results match across standard libraries.
  constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

enum class Stream : std::uint64_t {
  initialization = 1,
  agent = 2,
  target = 3,
};

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent generator keyed by (seed, stream, step, entity index).
constexpr SplitMix64 substream(std::uint64_t seed, Stream stream, std::uint64_t step,
                               std::uint64_t index) noexcept {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(stream));
  h = mix64(h ^ (step + 0x632be59bd9b4e019ULL));
  h = mix64(h ^ (index + 0x85157af5a1b2d6c3ULL));
  return SplitMix64(h);
}

}  // namespace swarmtrack
