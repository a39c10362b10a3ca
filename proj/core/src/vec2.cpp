#include "swarmtrack/vec2.hpp"

#include <algorithm>

namespace swarmtrack {

Vec2 normalize_to_speed(const Vec2& v, double v_max) {
  if (!v.finite()) {
    throw CorruptedStateError("normalize_to_speed: non-finite velocity (" + std::to_string(v.x) +
                              ", " + std::to_string(v.y) + ")");
  }
  const double magnitude = v.norm();
  if (magnitude == 0.0) {
    return {};
  }
  const double scale = v_max / magnitude;
  return {v.x * scale, v.y * scale};
}

ClampResult clamp_to_arena_axes(const Vec2& p, const ArenaConfig& arena) noexcept {
  const double side = arena.side_length;
  ClampResult out;
  out.position = {std::clamp(p.x, 0.0, side), std::clamp(p.y, 0.0, side)};
  out.hit_x = out.position.x != p.x;
  out.hit_y = out.position.y != p.y;
  return out;
}

}  // namespace swarmtrack
