#include "swarmtrack/frames.hpp"

#include <ostream>

#include <json.hpp>

namespace swarmtrack {

NdjsonFrameWriter::NdjsonFrameWriter(std::ostream& out, std::int64_t every)
    : out_(out), every_(every < 1 ? 1 : every) {}

void NdjsonFrameWriter::on_frame(const Snapshot& snapshot, std::span<const int> target_coverage) {
  if (snapshot.t % every_ != 0) {
    return;
  }
  nlohmann::json agents = nlohmann::json::array();
  for (const auto& a : snapshot.agents) {
    agents.push_back({{"x", a.position.x}, {"y", a.position.y}, {"class", a.class_index},
                      {"tracking", a.tracking}});
  }
  nlohmann::json targets = nlohmann::json::array();
  for (std::size_t m = 0; m < snapshot.targets.size(); ++m) {
    const auto& tgt = snapshot.targets[m];
    targets.push_back({{"x", tgt.position.x},
                       {"y", tgt.position.y},
                       {"mode", to_string(tgt.mode)},
                       {"covered", m < target_coverage.size() ? target_coverage[m] : 0}});
  }
  nlohmann::json frame = {{"t", snapshot.t}, {"agents", std::move(agents)}, {"targets", std::move(targets)}};
  out_ << frame.dump() << '\n';
  ++written_;
}

}  // namespace swarmtrack
