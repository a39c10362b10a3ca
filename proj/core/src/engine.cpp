#include "swarmtrack/engine.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <utility>

namespace swarmtrack {

int coverage(const TargetState& target, std::span<const Vec2> agent_positions, double rho) {
  const double rho_sq = rho * rho;
  for (const auto& p : agent_positions) {
    if (distance_sq(p, target.position) <= rho_sq) {
      return 1;
    }
  }
  return 0;
}

MetricAccumulator::MetricAccumulator(int n_agents, int n_targets)
    : n_agents_(n_agents),
      n_targets_(n_targets),
      covered_steps_(static_cast<std::size_t>(n_targets), 0) {}

void MetricAccumulator::record(std::span<const int> target_coverage, int engaged_agents) {
  assert(target_coverage.size() == covered_steps_.size());
  for (std::size_t m = 0; m < covered_steps_.size(); ++m) {
    covered_steps_[m] += target_coverage[m];
  }
  engaged_sum_ += engaged_agents;
  ++steps_;
}

double MetricAccumulator::xi() const noexcept {
  if (!xi_defined()) {
    return 0.0;
  }
  std::int64_t total = 0;
  for (auto c : covered_steps_) {
    total += c;
  }
  return static_cast<double>(total) / (static_cast<double>(steps_) * n_targets_);
}

double MetricAccumulator::theta() const noexcept {
  if (steps_ == 0 || n_agents_ == 0) {
    return 0.0;
  }
  return static_cast<double>(engaged_sum_) / (static_cast<double>(steps_) * n_agents_);
}

std::vector<double> MetricAccumulator::per_target_xi() const {
  std::vector<double> out;
  out.reserve(covered_steps_.size());
  for (auto c : covered_steps_) {
    out.push_back(steps_ > 0 ? static_cast<double>(c) / static_cast<double>(steps_) : 0.0);
  }
  return out;
}

namespace {

SimConfig validated(SimConfig config) {
  validate(config);
  return config;
}

}  // namespace

Simulation::Simulation(SimConfig config)
    : config_(validated(std::move(config))),
      metrics_(config_.agent_count(), config_.target_count) {
  const auto classes = agent_class_indices(config_);
  k_per_agent_.reserve(classes.size());
  for (int c : classes) {
    k_per_agent_.push_back(config_.classes[static_cast<std::size_t>(c)].k);
  }

  place_agents();
  auto rng = substream(config_.seed, Stream::initialization, 0, 1);
  current_.targets = spawn_targets(config_.target_count, config_.target, config_.arena, rng);
  current_.t = 0;
  next_ = current_;
  coverage_.assign(current_.targets.size(), 0);
}

void Simulation::place_agents() {
  const auto classes = agent_class_indices(config_);
  const std::size_t n = classes.size();
  const double side = config_.arena.side_length;
  auto rng = substream(config_.seed, Stream::initialization, 0, 0);

  current_.agents.resize(n);
  const auto per_row = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  for (std::size_t i = 0; i < n; ++i) {
    auto& agent = current_.agents[i];
    agent.class_index = classes[i];
    if (config_.placement == Placement::grid) {
      const double cell = side / static_cast<double>(per_row);
      agent.position = {(static_cast<double>(i % per_row) + 0.5) * cell,
                        (static_cast<double>(i / per_row) + 0.5) * cell};
    } else {
      const double x = rng.uniform(0.0, side);
      const double y = rng.uniform(0.0, side);
      agent.position = {x, y};
    }
    const double v_max = config_.classes[static_cast<std::size_t>(agent.class_index)].v_max;
    agent.velocity = v_max * random_unit(rng);
  }
}

void Simulation::step() {
  const std::int64_t t = current_.t + 1;
  const auto& agents = current_.agents;
  const auto& targets = current_.targets;
  const std::size_t n = agents.size();
  const std::size_t j = targets.size();
  const double rho_sq = config_.target.rho * config_.target.rho;

  agent_positions_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    agent_positions_[i] = agents[i].position;
  }
  target_positions_.resize(j);
  for (std::size_t m = 0; m < j; ++m) {
    target_positions_[m] = targets[m].position;
  }

  topology_builder_.build(agent_positions_, k_per_agent_, topology_);

  next_.agents.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    detections_.clear();
    for (std::size_t m = 0; m < j; ++m) {
      if (distance_sq(agent_positions_[i], target_positions_[m]) <= rho_sq) {
        detections_.push_back({static_cast<int>(m), target_positions_[m], t});
      }
    }
    neighbor_refs_.clear();
    for (auto nb : topology_.neighbors(i)) {
      neighbor_refs_.push_back(&agents[nb]);
    }
    const AgentPerception perception{neighbor_refs_, detections_};
    const auto& cls = config_.classes[static_cast<std::size_t>(agents[i].class_index)];
    auto rng = substream(config_.seed, Stream::agent, static_cast<std::uint64_t>(t), i);
    agent_step(agents[i], perception, cls, config_.strategy, config_.arena, t, rng, next_.agents[i]);
  }

  next_.targets.resize(j);
  for (std::size_t m = 0; m < j; ++m) {
    other_targets_.clear();
    for (std::size_t o = 0; o < j; ++o) {
      if (o != m) {
        other_targets_.push_back(target_positions_[o]);
      }
    }
    auto rng = substream(config_.seed, Stream::target, static_cast<std::uint64_t>(t), m);
    next_.targets[m] = target_step(targets[m], agent_positions_, other_targets_, config_.target,
                                   config_.arena, rng);
  }

  next_.t = t;
  std::swap(current_, next_);

  agent_positions_.resize(n);
  int engaged = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& agent = current_.agents[i];
    assert(agent.tracking == !agent.memory.empty());
    if (!agent.position.finite()) {
      throw CorruptedStateError("agent " + std::to_string(i) + " left the finite domain at step " +
                                std::to_string(t));
    }
    agent_positions_[i] = agent.position;
    engaged += agent.tracking ? 1 : 0;
  }
  int covered = 0;
  for (std::size_t m = 0; m < j; ++m) {
    coverage_[m] = coverage(current_.targets[m], agent_positions_, config_.target.rho);
    covered += coverage_[m];
  }

  if (t > config_.burn_in) {
    metrics_.record(coverage_, engaged);
  }
  if (config_.series_every > 0 && t % config_.series_every == 0) {
    series_.push_back({t, covered, engaged});
  }
}

void Simulation::run(FrameSink* frames) {
  while (!finished()) {
    step();
    if (frames != nullptr) {
      frames->on_frame(current_, coverage_);
    }
  }
}

RunResult Simulation::result() const {
  RunResult out;
  out.xi = metrics_.xi();
  out.theta = metrics_.theta();
  out.xi_defined = metrics_.xi_defined();
  out.per_target_xi = metrics_.per_target_xi();
  out.series = series_;
  out.final_snapshot = current_;
  out.config = config_;
  return out;
}

RunResult run_simulation(const SimConfig& config, FrameSink* frames) {
  Simulation sim(config);
  sim.run(frames);
  return sim.result();
}

double nearest_neighbor_cv(std::span<const Vec2> positions) {
  const std::size_t n = positions.size();
  if (n < 2) {
    return 0.0;
  }
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(positions[i], positions[j]);
      nearest[i] = std::min(nearest[i], d);
      nearest[j] = std::min(nearest[j], d);
    }
  }
  double mean = 0.0;
  for (double d : nearest) mean += d;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double d : nearest) var += (d - mean) * (d - mean);
  var /= static_cast<double>(n);
  return mean > 0.0 ? std::sqrt(var) / mean : 0.0;
}

}  // namespace swarmtrack
