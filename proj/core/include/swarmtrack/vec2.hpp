#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace swarmtrack {

/// Raised when a NaN or infinity shows up in simulation state.
class CorruptedStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) noexcept {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) noexcept {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double s) noexcept {
    x *= s;
    y *= s;
    return *this;
  }

  [[nodiscard]] constexpr double norm_sq() const noexcept { return x * x + y * y; }
  [[nodiscard]] double norm() const noexcept { return std::sqrt(x * x + y * y); }
  [[nodiscard]] bool finite() const noexcept { return std::isfinite(x) && std::isfinite(y); }

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 operator+(Vec2 a, const Vec2& b) noexcept { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) noexcept { return a -= b; }
constexpr Vec2 operator-(const Vec2& a) noexcept { return {-a.x, -a.y}; }
constexpr Vec2 operator*(Vec2 a, double s) noexcept { return a *= s; }
constexpr Vec2 operator*(double s, Vec2 a) noexcept { return a *= s; }
constexpr double dot(const Vec2& a, const Vec2& b) noexcept { return a.x * b.x + a.y * b.y; }

inline double distance(const Vec2& a, const Vec2& b) noexcept { return (a - b).norm(); }
constexpr double distance_sq(const Vec2& a, const Vec2& b) noexcept { return (a - b).norm_sq(); }

/// Rescales `v` to magnitude `v_max`. The zero vector stays zero (a stalled
/// agent remains stationary). Throws CorruptedStateError on non-finite input.
Vec2 normalize_to_speed(const Vec2& v, double v_max);

struct ArenaConfig {
  double side_length = 30.0;
};

/// Per-axis outcome of clamping, used by sprinting targets to reflect off walls.
struct ClampResult {
  Vec2 position;
  bool hit_x = false;
  bool hit_y = false;
};

ClampResult clamp_to_arena_axes(const Vec2& p, const ArenaConfig& arena) noexcept;

/// Hard clamp into [0, L]^2.
inline Vec2 clamp_to_arena(const Vec2& p, const ArenaConfig& arena) noexcept {
  return clamp_to_arena_axes(p, arena).position;
}

}  // namespace swarmtrack
