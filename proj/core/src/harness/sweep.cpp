#include "swarmtrack/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "swarmtrack/engine.hpp"

namespace swarmtrack::harness {

std::vector<RunSpec> enumerate_runs(const SweepSpec& spec) {
  std::size_t points = 1;
  for (const auto& axis : spec.axes) {
    points *= axis.values.size();
  }
  std::vector<RunSpec> runs;
  runs.reserve(points * static_cast<std::size_t>(spec.replicates));
  for (std::size_t p = 0; p < points; ++p) {
    SimConfig config = spec.base;
    std::size_t rest = p;
    // Last axis varies fastest.
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      const auto& axis = spec.axes[a];
      const auto& tuple = axis.values[rest % axis.values.size()];
      rest /= axis.values.size();
      for (std::size_t i = 0; i < axis.params.size(); ++i) {
        set_parameter(config, axis.params[i], tuple[i]);
      }
    }
    validate(config);
    for (int r = 0; r < spec.replicates; ++r) {
      RunSpec run{p, r, config};
      run.config.seed = spec.base.seed + static_cast<std::uint64_t>(r);
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

std::size_t SweepResult::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(runs.begin(), runs.end(), [](const RunRecord& r) { return !r.error.empty(); }));
}

namespace {

RunRecord execute(const RunSpec& spec) {
  RunRecord record;
  record.spec = spec;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto result = run_simulation(spec.config);
    record.xi = result.xi;
    record.xi_defined = result.xi_defined;
    record.theta = result.theta;
    record.per_target_xi = result.per_target_xi;
  } catch (const std::exception& e) {
    record.error = e.what();
  }
  record.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

// Error text lands in a CSV cell.
std::string sanitize(std::string text) {
  for (auto& ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') {
      ch = ' ';
    }
  }
  return text;
}

std::string composition(const SimConfig& c) {
  std::string out;
  for (const auto& cls : c.classes) {
    if (!out.empty()) {
      out += ';';
    }
    out += cls.name + "=" + std::to_string(cls.count);
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  const auto runs = enumerate_runs(spec);
  SweepResult result;
  result.runs.resize(runs.size());

  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      result.runs[i] = execute(runs[i]);
      if (options.on_run_done) {
        std::lock_guard lock(progress_mutex);
        options.on_run_done(result.runs[i], ++done, runs.size());
      }
    }
  };

  const auto workers = static_cast<std::size_t>(std::max(1, options.parallelism));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < std::min(workers, runs.size()); ++w) {
    pool.emplace_back(worker);
  }
  worker();
  pool.clear();
  return result;
}

SweepResult run_sweep(const SweepSpec& spec, int parallelism) {
  SweepOptions options;
  options.parallelism = parallelism;
  return run_sweep(spec, options);
}

std::vector<std::string> config_columns(const SimConfig& c) {
  std::vector<std::string> cols = {"seed",
                                   "steps",
                                   "burn_in",
                                   "placement",
                                   "series_every",
                                   "arena.side_length",
                                   "targets.count",
                                   "targets.v_max",
                                   "targets.rho",
                                   "targets.a_r",
                                   "targets.d",
                                   "targets.t_limit",
                                   "targets.t_evade",
                                   "targets.waypoint_tolerance",
                                   "targets.redraw_waypoint_on_encounter",
                                   "strategy.omega",
                                   "strategy.c",
                                   "strategy.a_r",
                                   "strategy.d",
                                   "strategy.gamma_track",
                                   "strategy.reflect_at_walls"};
  for (const auto& cls : c.classes) {
    for (const char* field : {"count", "v_max", "k", "t_mem"}) {
      cols.push_back("classes." + cls.name + "." + field);
    }
  }
  cols.insert(cols.end(), {"n_agents", "density", "composition"});
  return cols;
}

std::vector<std::string> config_values(const SimConfig& c) {
  auto n = [](double v) { return format_number(v); };
  auto b = [](bool v) { return std::string(v ? "1" : "0"); };
  const auto& tp = c.target;
  const auto& sp = c.strategy;
  std::vector<std::string> vals = {std::to_string(c.seed),
                                   std::to_string(c.n_steps),
                                   std::to_string(c.burn_in),
                                   to_string(c.placement),
                                   std::to_string(c.series_every),
                                   n(c.arena.side_length),
                                   std::to_string(c.target_count),
                                   n(tp.v_max),
                                   n(tp.rho),
                                   n(tp.a_r),
                                   std::to_string(tp.d),
                                   std::to_string(tp.t_limit),
                                   std::to_string(tp.t_evade),
                                   n(tp.waypoint_tolerance),
                                   b(tp.redraw_waypoint_on_encounter),
                                   n(sp.omega),
                                   n(sp.c),
                                   n(sp.a_r),
                                   std::to_string(sp.d),
                                   n(sp.gamma_track),
                                   b(sp.reflect_at_walls)};
  for (const auto& cls : c.classes) {
    vals.insert(vals.end(), {std::to_string(cls.count), n(cls.v_max), std::to_string(cls.k),
                             std::to_string(cls.t_mem)});
  }
  vals.insert(vals.end(), {std::to_string(c.agent_count()), n(c.density()), composition(c)});
  return vals;
}

SimConfig config_from_row(const CsvTable& t, std::size_t row) {
  SimConfig c;
  auto i64 = [&](const char* col) { return static_cast<std::int64_t>(t.number(row, col)); };
  c.seed = std::stoull(t.cell(row, "seed"));
  c.n_steps = i64("steps");
  c.burn_in = i64("burn_in");
  c.placement = placement_from_string(t.cell(row, "placement"));
  c.series_every = i64("series_every");
  c.arena.side_length = t.number(row, "arena.side_length");
  c.target_count = static_cast<int>(i64("targets.count"));
  auto& tp = c.target;
  tp.v_max = t.number(row, "targets.v_max");
  tp.rho = t.number(row, "targets.rho");
  tp.a_r = t.number(row, "targets.a_r");
  tp.d = static_cast<int>(i64("targets.d"));
  tp.t_limit = static_cast<int>(i64("targets.t_limit"));
  tp.t_evade = static_cast<int>(i64("targets.t_evade"));
  tp.waypoint_tolerance = t.number(row, "targets.waypoint_tolerance");
  tp.redraw_waypoint_on_encounter = t.cell(row, "targets.redraw_waypoint_on_encounter") == "1";
  auto& sp = c.strategy;
  sp.omega = t.number(row, "strategy.omega");
  sp.c = t.number(row, "strategy.c");
  sp.a_r = t.number(row, "strategy.a_r");
  sp.d = static_cast<int>(i64("strategy.d"));
  sp.gamma_track = t.number(row, "strategy.gamma_track");
  sp.reflect_at_walls = t.cell(row, "strategy.reflect_at_walls") == "1";

  c.classes.clear();
  for (const auto& col : t.header) {
    constexpr std::string_view prefix = "classes.";
    constexpr std::string_view suffix = ".count";
    if (col.starts_with(prefix) && col.ends_with(suffix)) {
      AgentClass cls;
      cls.name = col.substr(prefix.size(), col.size() - prefix.size() - suffix.size());
      const std::string base = "classes." + cls.name + ".";
      cls.count = static_cast<int>(t.number(row, base + "count"));
      cls.v_max = t.number(row, base + "v_max");
      cls.k = static_cast<int>(t.number(row, base + "k"));
      cls.t_mem = static_cast<int>(t.number(row, base + "t_mem"));
      c.classes.push_back(std::move(cls));
    }
  }
  return c;
}

namespace {

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ';';
    }
    out += format_number(values[i]);
  }
  return out;
}

}  // namespace

CsvTable runs_table(const SweepResult& result) {
  CsvTable table;
  table.header = {"point", "replicate"};
  const auto cols = config_columns(result.runs.empty() ? SimConfig{} : result.runs.front().spec.config);
  table.header.insert(table.header.end(), cols.begin(), cols.end());
  table.header.insert(table.header.end(), {"xi", "xi_defined", "theta", "per_target_xi", "errors"});

  for (const auto& run : result.runs) {
    std::vector<std::string> row = {std::to_string(run.spec.point), std::to_string(run.spec.replicate)};
    const auto vals = config_values(run.spec.config);
    row.insert(row.end(), vals.begin(), vals.end());
    const bool ok = run.error.empty();
    row.push_back(ok && run.xi_defined ? format_number(run.xi) : "nan");
    row.push_back(ok && run.xi_defined ? "1" : "0");
    row.push_back(ok ? format_number(run.theta) : "nan");
    row.push_back(join_numbers(run.per_target_xi));
    row.push_back(sanitize(run.error));
    table.rows.push_back(std::move(row));
  }
  return table;
}

MeanSd mean_sd(const std::vector<double>& values) {
  MeanSd out;
  out.n = values.size();
  if (values.empty()) {
    out.mean = out.sd = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) {
    out.sd = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  double ss = 0.0;
  for (double v : values) {
    ss += (v - out.mean) * (v - out.mean);
  }
  out.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return out;
}

CsvTable summary_table(const SweepResult& result) {
  CsvTable table;
  auto cols = config_columns(result.runs.empty() ? SimConfig{} : result.runs.front().spec.config);
  cols.erase(cols.begin());  // per-run seed
  table.header = {"point", "base_seed"};
  table.header.insert(table.header.end(), cols.begin(), cols.end());
  table.header.insert(table.header.end(),
                      {"replicates", "errors", "xi_mean", "xi_sd", "theta_mean", "theta_sd"});

  for (std::size_t begin = 0; begin < result.runs.size();) {
    std::size_t end = begin;
    const auto point = result.runs[begin].spec.point;
    std::vector<double> xi;
    std::vector<double> theta;
    std::size_t errors = 0;
    std::uint64_t base_seed = result.runs[begin].spec.config.seed;
    for (; end < result.runs.size() && result.runs[end].spec.point == point; ++end) {
      const auto& run = result.runs[end];
      base_seed = std::min(base_seed, run.spec.config.seed);
      if (!run.error.empty()) {
        ++errors;
        continue;
      }
      if (run.xi_defined) {
        xi.push_back(run.xi);
      }
      theta.push_back(run.theta);
    }
    std::vector<std::string> row = {std::to_string(point), std::to_string(base_seed)};
    auto vals = config_values(result.runs[begin].spec.config);
    vals.erase(vals.begin());
    row.insert(row.end(), vals.begin(), vals.end());
    const auto x = mean_sd(xi);
    const auto th = mean_sd(theta);
    row.insert(row.end(), {std::to_string(end - begin), std::to_string(errors), format_number(x.mean),
                           format_number(x.sd), format_number(th.mean), format_number(th.sd)});
    table.rows.push_back(std::move(row));
    begin = end;
  }
  return table;
}

CsvTable timings_table(const SweepResult& result) {
  CsvTable table;
  table.header = {"point", "replicate", "seed", "wall_time_s"};
  for (const auto& run : result.runs) {
    table.rows.push_back({std::to_string(run.spec.point), std::to_string(run.spec.replicate),
                          std::to_string(run.spec.config.seed), format_number(run.wall_time_s)});
  }
  return table;
}

}  // namespace swarmtrack::harness
