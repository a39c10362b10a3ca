#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "swarmtrack/target.hpp"

namespace swarmtrack {
namespace {

constexpr double kTol = 1e-12;

TargetState at(Vec2 position, Vec2 waypoint) {
  TargetState t;
  t.position = position;
  t.waypoint = waypoint;
  return t;
}

TEST(TargetStep, TravelsToWaypointAtFullSpeed) {
  SplitMix64 rng(1);
  const auto next = target_step(at({5, 5}, {9, 5}), {}, {}, TargetParams{}, {30}, rng);
  EXPECT_NEAR(next.position.x, 5.3, kTol);
  EXPECT_NEAR(next.position.y, 5.0, kTol);
  EXPECT_EQ(next.mode, TargetMode::waypoint);
}

TEST(TargetStep, FleesDirectlyAwayFromSinglePursuer) {
  SplitMix64 rng(1);
  const std::vector<Vec2> agents = {{5.5, 5}};
  const auto next = target_step(at({5, 5}, {20, 5}), agents, {}, TargetParams{}, {30}, rng);
  EXPECT_NEAR(next.position.x, 4.7, kTol);
  EXPECT_NEAR(next.position.y, 5.0, kTol);
  EXPECT_EQ(next.mode, TargetMode::repel);
  EXPECT_EQ(next.encounter_streak, 1);
}

TEST(TargetStep, IgnoresAgentsBeyondRho) {
  SplitMix64 rng(1);
  const std::vector<Vec2> agents = {{6.01, 5}};
  const auto next = target_step(at({5, 5}, {9, 5}), agents, {}, TargetParams{}, {30}, rng);
  EXPECT_NEAR(next.position.x, 5.3, kTol);
  EXPECT_EQ(next.encounter_streak, 0);
}

TEST(TargetStep, SprintsAfterTLimitEncountersAndHoldsHeading) {
  TargetParams params;
  params.t_limit = 5;
  params.t_evade = 20;
  SplitMix64 rng(2);
  auto t = at({15, 15}, {25, 15});
  for (int step = 1; step <= 5; ++step) {
    // A pursuer always 0.5 to the left of the target.
    const std::vector<Vec2> agents = {t.position - Vec2{0.5, 0}};
    t = target_step(t, agents, {}, params, {30}, rng);
    if (step < 5) {
      EXPECT_EQ(t.mode, TargetMode::repel) << step;
      EXPECT_EQ(t.encounter_streak, step);
    }
  }
  EXPECT_EQ(t.mode, TargetMode::sprint);
  EXPECT_EQ(t.sprint_remaining, 20);
  EXPECT_EQ(t.encounter_streak, 0);
  EXPECT_NEAR(t.sprint_heading.x, 1.0, kTol);

  // Agents now sit right in front; the sprint ignores them.
  for (int step = 0; step < 20; ++step) {
    const Vec2 before = t.position;
    const std::vector<Vec2> agents = {t.position + Vec2{0.2, 0}, t.position + Vec2{0, 0.3}};
    t = target_step(t, agents, {}, params, {30}, rng);
    const Vec2 move = t.position - before;
    EXPECT_NEAR(move.x, 0.3, kTol) << step;
    EXPECT_NEAR(move.y, 0.0, kTol) << step;
  }
  EXPECT_EQ(t.mode, TargetMode::waypoint);
  EXPECT_EQ(t.sprint_remaining, 0);
}

TEST(TargetStep, SprintReflectsAtWall) {
  TargetState t = at({29.9, 10}, {0, 0});
  t.mode = TargetMode::sprint;
  t.sprint_remaining = 3;
  t.sprint_heading = {1, 0};
  SplitMix64 rng(0);
  t = target_step(t, {}, {}, TargetParams{}, {30}, rng);
  EXPECT_EQ(t.position.x, 30.0);
  EXPECT_EQ(t.sprint_heading, (Vec2{-1, 0}));
  t = target_step(t, {}, {}, TargetParams{}, {30}, rng);
  EXPECT_NEAR(t.position.x, 29.7, kTol);
}

TEST(TargetStep, StreakResetsWhenPursuersLeave) {
  SplitMix64 rng(1);
  auto t = at({5, 5}, {20, 5});
  t = target_step(t, std::vector<Vec2>{{5.5, 5}}, {}, TargetParams{}, {30}, rng);
  EXPECT_EQ(t.encounter_streak, 1);
  t = target_step(t, {}, {}, TargetParams{}, {30}, rng);
  EXPECT_EQ(t.encounter_streak, 0);
  EXPECT_EQ(t.mode, TargetMode::waypoint);
}

TEST(TargetStep, RedrawsWaypointOnArrival) {
  SplitMix64 rng(1);
  const auto next = target_step(at({5, 5}, {5.2, 5}), {}, {}, TargetParams{}, {30}, rng);
  EXPECT_NE(next.waypoint, (Vec2{5.2, 5}));
}

TEST(TargetStep, EvasionOpposesPursuerFromAnyDirection) {
  SplitMix64 gen(5);
  const TargetParams params;
  for (int i = 0; i < 500; ++i) {
    const Vec2 pos{gen.uniform(3, 27), gen.uniform(3, 27)};
    const double angle = gen.uniform(0, 2 * M_PI);
    const double r = gen.uniform(0.05, 1.0);
    const Vec2 agent = pos + r * Vec2{std::cos(angle), std::sin(angle)};
    SplitMix64 rng(i);
    const auto next = target_step(at(pos, {gen.uniform(0, 30), gen.uniform(0, 30)}),
                                  std::vector<Vec2>{agent}, {}, params, {30}, rng);
    const Vec2 move = next.position - pos;
    EXPECT_LT(dot(move, agent - pos), 0.0);
    EXPECT_NEAR(move.norm(), params.v_max, kTol);
  }
}

TEST(TargetStep, CloseTargetsPushApart) {
  SplitMix64 rng(1);
  // Waypoint straight ahead (+y); a second target 1.0 to the right.
  const auto next = target_step(at({10, 10}, {10, 20}), {}, std::vector<Vec2>{{11, 10}}, TargetParams{}, {30}, rng);
  EXPECT_LT(next.position.x, 10.0);
}

TEST(SpawnTargets, KeepsTwoRhoApart) {
  TargetParams params;
  params.rho = 1.5;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SplitMix64 rng(seed);
    const auto targets = spawn_targets(8, params, {20}, rng);
    ASSERT_EQ(targets.size(), 8u);
    for (std::size_t a = 0; a < targets.size(); ++a) {
      for (std::size_t b = a + 1; b < targets.size(); ++b) {
        EXPECT_GE(distance(targets[a].position, targets[b].position), 2 * params.rho);
      }
    }
  }
}

TEST(SpawnTargets, GivesUpOnImpossibleLayouts) {
  SplitMix64 rng(0);
  EXPECT_THROW(spawn_targets(50, TargetParams{}, {4}, rng), ConfigError);
}

}  // namespace
}  // namespace swarmtrack
