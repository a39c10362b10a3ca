#pragma once

#include <cstdint>
#include <iosfwd>

#include "swarmtrack/engine.hpp"

namespace swarmtrack {

/// Writes one JSON object per step (newline-delimited) for offline rendering:
///
///   {"t":12,"agents":[{"x":..,"y":..,"class":0,"tracking":true},...],
///    "targets":[{"x":..,"y":..,"mode":"SPRINT","covered":1},...]}
///
/// `every` thins the output to steps divisible by it.
class NdjsonFrameWriter : public FrameSink {
 public:
  explicit NdjsonFrameWriter(std::ostream& out, std::int64_t every = 1);

  void on_frame(const Snapshot& snapshot, std::span<const int> target_coverage) override;

  [[nodiscard]] std::int64_t frames_written() const noexcept { return written_; }

 private:
  std::ostream& out_;
  std::int64_t every_;
  std::int64_t written_ = 0;
};

}  // namespace swarmtrack
