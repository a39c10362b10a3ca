// Command-line front end: single runs, sweeps, plot data and presets.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "swarmtrack/engine.hpp"
#include "swarmtrack/frames.hpp"
#include "swarmtrack/harness/config_io.hpp"
#include "swarmtrack/harness/csv.hpp"
#include "swarmtrack/harness/plot.hpp"
#include "swarmtrack/harness/presets.hpp"
#include "swarmtrack/harness/sweep.hpp"

namespace fs = std::filesystem;
namespace sh = swarmtrack::harness;
using swarmtrack::SimConfig;

namespace {

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  bool paper_scale = false;
};

void apply_overrides(SimConfig& config, const Common& common) {
  if (common.seed) {
    config.seed = *common.seed;
  }
  if (common.paper_scale) {
    config.n_steps = swarmtrack::kPaperScaleSteps;
  }
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
}

void write_table(const fs::path& path, const sh::CsvTable& table) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  sh::write_csv(out, table);
}

int cmd_run(const Common& common, bool frames, std::int64_t frames_every) {
  SimConfig config;
  if (!common.config_path.empty()) {
    auto loaded = sh::load_config(common.config_path);
    if (std::holds_alternative<sh::SweepSpec>(loaded)) {
      std::cerr << "error: " << common.config_path << " describes a sweep; use `swarmtrack sweep`\n";
      return 2;
    }
    config = std::get<SimConfig>(loaded);
  }
  apply_overrides(config, common);
  swarmtrack::validate(config);

  const fs::path out_dir = common.out_dir.empty() ? fs::path(".") : fs::path(common.out_dir);
  if (!common.out_dir.empty() || frames) {
    fs::create_directories(out_dir);
  }

  std::ofstream frame_file;
  std::optional<swarmtrack::NdjsonFrameWriter> writer;
  if (frames) {
    frame_file.open(out_dir / "frames.ndjson");
    if (!frame_file) {
      throw std::runtime_error("cannot write " + (out_dir / "frames.ndjson").string());
    }
    writer.emplace(frame_file, frames_every);
  }

  const auto start = std::chrono::steady_clock::now();
  const auto result = swarmtrack::run_simulation(config, writer ? &*writer : nullptr);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::ordered_json summary = {
      {"seed", config.seed},
      {"steps", config.n_steps},
      {"xi", result.xi_defined ? nlohmann::ordered_json(result.xi) : nlohmann::ordered_json(nullptr)},
      {"theta", result.theta},
      {"per_target_xi", result.per_target_xi},
      {"wall_time_s", wall},
  };
  std::cout << summary.dump(2) << '\n';
  if (!common.out_dir.empty()) {
    write_file(out_dir / "result.json", summary.dump(2) + "\n");
    write_file(out_dir / "config.yaml", sh::dump_config(config));
  }
  return 0;
}

int cmd_sweep(const Common& common, const std::string& preset, int parallelism) {
  sh::SweepSpec spec;
  if (!preset.empty()) {
    spec = sh::find_preset(preset).spec();
  } else if (!common.config_path.empty()) {
    auto loaded = sh::load_config(common.config_path);
    if (auto* s = std::get_if<sh::SweepSpec>(&loaded)) {
      spec = *s;
    } else {
      // A plain config is a one-point sweep.
      spec.base = std::get<SimConfig>(loaded);
      spec.replicates = 1;
    }
  } else {
    std::cerr << "error: sweep needs --config or --preset\n";
    return 2;
  }
  apply_overrides(spec.base, common);

  const fs::path out_dir = common.out_dir.empty() ? fs::path("sweep-out") : fs::path(common.out_dir);
  fs::create_directories(out_dir);

  sh::SweepOptions options;
  options.parallelism = parallelism;
  options.on_run_done = [](const sh::RunRecord& r, std::size_t done, std::size_t total) {
    std::cerr << '[' << done << '/' << total << "] point " << r.spec.point << " rep " << r.spec.replicate;
    if (r.error.empty()) {
      std::cerr << " xi=" << r.xi << " theta=" << r.theta;
    } else {
      std::cerr << " ERROR " << r.error;
    }
    std::cerr << '\n';
  };
  const auto result = sh::run_sweep(spec, options);

  write_file(out_dir / "sweep.yaml", sh::dump_sweep(spec));
  write_table(out_dir / "runs.csv", sh::runs_table(result));
  write_table(out_dir / "summary.csv", sh::summary_table(result));
  write_table(out_dir / "timings.csv", sh::timings_table(result));
  std::cerr << "wrote " << result.runs.size() << " runs to " << out_dir.string() << '\n';

  const auto errors = result.error_count();
  if (errors > 0) {
    std::cerr << errors << " run(s) failed; see the errors column of runs.csv\n";
    return 1;
  }
  return 0;
}

int cmd_plot(const std::string& summary_path, const std::string& family, const std::string& out, bool svg) {
  const auto summary = sh::read_csv(fs::path(summary_path));
  const fs::path out_dir = out.empty() ? fs::path(summary_path).parent_path() / "plots" : fs::path(out);
  const auto families = family == "all" ? sh::plot_families() : std::vector<std::string>{family};
  for (const auto& f : families) {
    for (const auto& path : sh::emit_plot_data(summary, f, out_dir, svg)) {
      std::cout << path.string() << '\n';
    }
  }
  return 0;
}

int cmd_presets(const std::string& show) {
  if (!show.empty()) {
    std::cout << sh::find_preset(show).yaml;
    return 0;
  }
  for (const auto& p : sh::builtin_presets()) {
    const auto runs = sh::enumerate_runs(p.spec()).size();
    std::cout << p.name << "  (" << runs << " runs, plot family " << p.plot_family << ")\n    "
              << p.description << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heterogeneous swarm search-and-track simulator"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "YAML config or sweep file")->check(CLI::ExistingFile);
    sub->add_option("--seed", common.seed, "Override the base seed");
    sub->add_option("--out", common.out_dir, "Output directory");
    sub->add_flag("--paper-scale", common.paper_scale, "Run 400,000 steps instead of 50,000");
  };

  auto* run = app.add_subcommand("run", "Run one simulation and print its metrics");
  add_common(run);
  bool frames = false;
  std::int64_t frames_every = 1;
  run->add_flag("--frames", frames, "Write trajectory frames to <out>/frames.ndjson");
  run->add_option("--frames-every", frames_every, "Keep every n-th frame")->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSVs");
  add_common(sweep);
  std::string preset;
  int parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  sweep->add_option("--preset", preset, "Built-in experiment (see `presets`)");
  sweep->add_option("--parallelism", parallelism, "Worker threads")->check(CLI::PositiveNumber);

  auto* plot = app.add_subcommand("plot", "Project a summary.csv onto plot-ready files");
  std::string summary_path;
  std::string family;
  std::string plot_out;
  bool svg = false;
  plot->add_option("summary", summary_path, "summary.csv from a sweep")->required()->check(CLI::ExistingFile);
  plot->add_option("--family", family, "Experiment family, or 'all'")->required();
  plot->add_option("--out", plot_out, "Output directory (default: <summary dir>/plots)");
  plot->add_flag("--svg", svg, "Also render a static SVG chart");

  auto* presets = app.add_subcommand("presets", "List built-in experiment presets");
  std::string show;
  presets->add_option("--show", show, "Print the YAML of one preset");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(common, frames, frames_every);
    if (*sweep) return cmd_sweep(common, preset, parallelism);
    if (*plot) return cmd_plot(summary_path, family, plot_out, svg);
    if (*presets) return cmd_presets(show);
  } catch (const swarmtrack::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
