#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "swarmtrack/frames.hpp"

namespace swarmtrack {
namespace {

TEST(NdjsonFrameWriter, WritesOneObjectPerStep) {
  SimConfig config;
  config.classes = {{"slow", 6, 0.1, 2, 20}, {"fast", 2, 0.26, 2, 20}};
  config.arena.side_length = 6;
  config.n_steps = 25;
  std::ostringstream out;
  NdjsonFrameWriter writer(out);
  const auto result = run_simulation(config, &writer);
  EXPECT_EQ(writer.frames_written(), 25);

  std::istringstream in(out.str());
  std::string line;
  std::int64_t expect_t = 1;
  nlohmann::json last;
  while (std::getline(in, line)) {
    last = nlohmann::json::parse(line);
    EXPECT_EQ(last.at("t").get<std::int64_t>(), expect_t++);
    ASSERT_EQ(last.at("agents").size(), 8u);
    ASSERT_EQ(last.at("targets").size(), 1u);
    const auto mode = last["targets"][0].at("mode").get<std::string>();
    EXPECT_TRUE(mode == "WAYPOINT" || mode == "REPEL" || mode == "SPRINT") << mode;
  }
  EXPECT_EQ(expect_t, 26);
  const auto& agents = result.final_snapshot.agents;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    EXPECT_EQ(last["agents"][i]["x"].get<double>(), agents[i].position.x);
    EXPECT_EQ(last["agents"][i]["y"].get<double>(), agents[i].position.y);
    EXPECT_EQ(last["agents"][i]["class"].get<int>(), agents[i].class_index);
    EXPECT_EQ(last["agents"][i]["tracking"].get<bool>(), agents[i].tracking);
  }
}

TEST(NdjsonFrameWriter, ThinsByStride) {
  SimConfig config;
  config.classes = {{"slow", 4, 0.1, 2, 20}};
  config.arena.side_length = 5;
  config.n_steps = 30;
  std::ostringstream out;
  NdjsonFrameWriter writer(out, 10);
  run_simulation(config, &writer);
  EXPECT_EQ(writer.frames_written(), 3);
}

}  // namespace
}  // namespace swarmtrack
