#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include <gtest/gtest.h>

#include "swarmtrack/harness/config_io.hpp"
#include "swarmtrack/harness/csv.hpp"
#include "swarmtrack/harness/plot.hpp"
#include "swarmtrack/harness/presets.hpp"
#include "swarmtrack/harness/sweep.hpp"

namespace swarmtrack::harness {
namespace {

SimConfig parse_sim(const std::string& text) { return std::get<SimConfig>(parse_config(text)); }
SweepSpec parse_sweep(const std::string& text) { return std::get<SweepSpec>(parse_config(text)); }

std::string key_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<accepted>";
}

TEST(LoadConfig, SeedOnlyGivesDefaults) {
  const auto c = parse_sim("seed: 42\n");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.arena.side_length, 30.0);
  EXPECT_EQ(c.agent_count(), 50);
  EXPECT_EQ(c.target_count, 1);
  EXPECT_EQ(c.classes.at(0).v_max, 0.1);
  EXPECT_EQ(c.classes.at(1).v_max, 0.26);
  EXPECT_EQ(c.target.v_max, 0.3);
  EXPECT_EQ(c.target.rho, 1.0);
  EXPECT_EQ(c.strategy.omega, 1.0);
  EXPECT_EQ(c.strategy.c, 0.5);
  EXPECT_EQ(c.classes.at(0).t_mem, 20);
  EXPECT_EQ(c.classes.at(0).k, 12);

  // The echo spells every value out and parses back to the same config.
  const auto echo = dump_config(c);
  for (const char* needle : {"side_length: 30", "v_max: 0.26", "rho: 1", "omega: 1", "c: 0.5", "t_mem: 20",
                             "k: 12"}) {
    EXPECT_NE(echo.find(needle), std::string::npos) << needle << "\n" << echo;
  }
  EXPECT_EQ(dump_config(parse_sim(echo)), echo);
}

TEST(LoadConfig, KEqualToNIsRejected) {
  try {
    parse_config("classes:\n  - {name: slow, count: 50, k: 50}\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "classes.slow.k");
    EXPECT_NE(std::string(e.what()).find("[1, N-1]"), std::string::npos);
  }
}

TEST(LoadConfig, UnknownKeysAreNamed) {
  EXPECT_EQ(key_of("sed: 1\n"), "sed");
  EXPECT_EQ(key_of("targets:\n  speed: 1\n"), "targets.speed");
  EXPECT_EQ(key_of("strategy:\n  gamma: 0.1\n"), "strategy.gamma");
  EXPECT_EQ(key_of("classes:\n  - {name: slow, count: 5, kk: 2}\n"), "classes[0].kk");
  EXPECT_EQ(key_of("sweep:\n  axes:\n    - {param: classes.*.k, value: [1]}\n"), "sweep.axes[0].value");
}

TEST(LoadConfig, TypeAndConstraintErrorsAreNamed) {
  EXPECT_EQ(key_of("steps: many\n"), "steps");
  EXPECT_EQ(key_of("arena: {side_length: -3}\n"), "arena.side_length");
  EXPECT_EQ(key_of("strategy: {gamma_track: 2}\n"), "strategy.gamma_track");
  EXPECT_EQ(key_of("placement: hex\n"), "placement");
  EXPECT_EQ(key_of("classes:\n  - {name: medium, count: 5}\n"), "classes.medium.v_max");
  EXPECT_EQ(key_of("sweep:\n  axes:\n    - {param: classes.slow.kappa, values: [1]}\n"), "classes.slow.kappa");
  EXPECT_EQ(key_of("sweep:\n  axes:\n    - {param: targets.count, values: [1.5]}\n"), "targets.count");
  EXPECT_EQ(key_of("seed: [1\n"), "<root>");
}

TEST(LoadConfig, ReadsFromDisk) {
  const auto path = std::filesystem::temp_directory_path() / "swarmtrack_load_config.yaml";
  std::ofstream(path) << "seed: 7\narena: {side_length: 12}\n";
  const auto c = std::get<SimConfig>(load_config(path));
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.arena.side_length, 12.0);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path), ConfigError);
}

TEST(Sweep, EnumeratesPointsTimesReplicates) {
  const auto spec = parse_sweep(
      "seed: 100\nsweep:\n  replicates: 5\n  axes:\n    - {param: classes.*.k, values: [2, 6, 10, 14, 18]}\n");
  const auto runs = enumerate_runs(spec);
  ASSERT_EQ(runs.size(), 25u);
  const int ks[] = {2, 6, 10, 14, 18};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    EXPECT_EQ(runs[i].point, i / 5);
    EXPECT_EQ(runs[i].replicate, static_cast<int>(i % 5));
    EXPECT_EQ(runs[i].config.seed, 100u + i % 5);
    for (const auto& cls : runs[i].config.classes) {
      EXPECT_EQ(cls.k, ks[i / 5]);
    }
  }
}

TEST(Sweep, ZippedAxesAndCartesianOrder) {
  const auto spec = parse_sweep(R"(
sweep:
  replicates: 1
  axes:
    - params: [classes.slow.count, classes.fast.count]
      values: [[50, 0], [5, 45]]
    - param: arena.side_length
      values: [7, 30, 45]
)");
  const auto runs = enumerate_runs(spec);
  ASSERT_EQ(runs.size(), 6u);
  EXPECT_EQ(runs[0].config.classes[1].count, 0);
  EXPECT_EQ(runs[0].config.arena.side_length, 7.0);
  EXPECT_EQ(runs[2].config.arena.side_length, 45.0);
  EXPECT_EQ(runs[3].config.classes[0].count, 5);
  EXPECT_EQ(runs[3].config.classes[1].count, 45);
}

TEST(Sweep, InvalidGridPointIsAConfigError) {
  const auto spec = parse_sweep("sweep:\n  axes:\n    - {param: classes.*.k, values: [10, 50]}\n");
  EXPECT_THROW(enumerate_runs(spec), ConfigError);
}

SweepSpec tiny_sweep() {
  return parse_sweep(R"(
seed: 9
steps: 400
classes:
  - {name: slow, count: 8, k: 3}
  - {name: fast, count: 4, k: 3}
arena: {side_length: 8}
targets: {count: 2}
sweep:
  replicates: 2
  axes:
    - param: classes.*.t_mem
      values: [0, 20]
)");
}

std::string csv_text(const CsvTable& t) {
  std::ostringstream out;
  write_csv(out, t);
  return out.str();
}

TEST(Sweep, OutputIsIndependentOfParallelism) {
  const auto spec = tiny_sweep();
  const auto serial = run_sweep(spec, 1);
  const auto parallel = run_sweep(spec, 8);
  EXPECT_EQ(csv_text(runs_table(serial)), csv_text(runs_table(parallel)));
  EXPECT_EQ(csv_text(summary_table(serial)), csv_text(summary_table(parallel)));
  EXPECT_EQ(serial.error_count(), 0u);
}

TEST(Sweep, RowsReconstructConfigs) {
  const auto result = run_sweep(tiny_sweep(), 2);
  const auto table = runs_table(result);
  ASSERT_EQ(table.rows.size(), result.runs.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto rebuilt = config_from_row(table, r);
    EXPECT_EQ(dump_config(rebuilt), dump_config(result.runs[r].spec.config)) << r;
    EXPECT_EQ(table.number(r, "xi"), result.runs[r].xi);
  }
  // The per-target column joins J values.
  EXPECT_EQ(std::count(table.rows[0][table.column("per_target_xi")].begin(),
                       table.rows[0][table.column("per_target_xi")].end(), ';'),
            1);
}

TEST(Sweep, SummaryIsRecomputableFromRuns) {
  const auto result = run_sweep(tiny_sweep(), 1);
  const auto runs = runs_table(result);
  const auto summary = summary_table(result);
  ASSERT_EQ(summary.rows.size(), 2u);
  for (std::size_t p = 0; p < summary.rows.size(); ++p) {
    std::vector<double> xi;
    std::vector<double> theta;
    for (std::size_t r = 0; r < runs.rows.size(); ++r) {
      if (runs.number(r, "point") == static_cast<double>(p)) {
        xi.push_back(runs.number(r, "xi"));
        theta.push_back(runs.number(r, "theta"));
      }
    }
    ASSERT_EQ(xi.size(), 2u);
    const double mean = (xi[0] + xi[1]) / 2;
    EXPECT_DOUBLE_EQ(summary.number(p, "xi_mean"), mean);
    EXPECT_NEAR(summary.number(p, "xi_sd"), std::abs(xi[0] - xi[1]) / std::sqrt(2.0), 1e-15);
    EXPECT_DOUBLE_EQ(summary.number(p, "theta_mean"), (theta[0] + theta[1]) / 2);
  }
}

TEST(Sweep, SampleStandardDeviation) {
  const auto s = mean_sd({0.2, 0.4});
  EXPECT_NEAR(s.mean, 0.3, 1e-15);
  EXPECT_NEAR(s.sd, 0.1414, 1e-4);
  EXPECT_TRUE(std::isnan(mean_sd({0.5}).sd));
}

TEST(Sweep, DensityColumn) {
  auto spec = parse_sweep(R"(
steps: 5
sweep:
  replicates: 1
  axes:
    - {param: arena.side_length, values: [7, 30, 45]}
)");
  const auto table = summary_table(run_sweep(spec, 1));
  ASSERT_EQ(table.rows.size(), 3u);
  EXPECT_NEAR(table.number(0, "density"), 1.0204, 1e-4);
  EXPECT_NEAR(table.number(1, "density"), 0.0556, 1e-4);
  EXPECT_NEAR(table.number(2, "density"), 0.0247, 1e-4);
}

TEST(Sweep, FailedRunsAreRecordedAndTheSweepContinues) {
  // Forty targets cannot spawn 2 rho apart in a 12 x 12 arena on most seeds;
  // validation lets it through because the area bound is generous.
  auto spec = parse_sweep(R"(
steps: 5
arena: {side_length: 12}
sweep:
  replicates: 2
  axes:
    - {param: targets.count, values: [1, 40]}
)");
  const auto result = run_sweep(spec, 2);
  ASSERT_EQ(result.runs.size(), 4u);
  EXPECT_TRUE(result.runs[0].error.empty());
  EXPECT_FALSE(result.runs[2].error.empty());
  EXPECT_EQ(result.error_count(), 2u);
  const auto table = runs_table(result);
  EXPECT_NE(table.cell(2, "errors").find("targets.count"), std::string::npos);
  EXPECT_EQ(summary_table(result).cell(1, "errors"), "2");
}

TEST(Csv, RoundTripsNumbersExactly) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, 0.0}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  CsvTable t{{"a", "b"}, {{"1", "x"}, {"2", ""}}};
  std::istringstream in(csv_text(t));
  const auto back = read_csv(in);
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
}

CsvTable summary_for(const SweepSpec& spec) { return summary_table(run_sweep(spec, 1)); }

TEST(Plot, ConnectivityColumnsPerComposition) {
  auto spec = parse_sweep(R"(
steps: 20
sweep:
  replicates: 2
  axes:
    - params: [classes.slow.count, classes.fast.count]
      values: [[50, 0], [5, 45]]
    - {param: classes.*.k, values: [10, 2]}
)");
  const auto plot = plot_table(summary_for(spec), "connectivity");
  EXPECT_EQ(plot.header,
            (std::vector<std::string>{"series", "k", "xi_mean", "xi_sd", "theta_mean", "theta_sd"}));
  ASSERT_EQ(plot.rows.size(), 4u);
  EXPECT_EQ(plot.rows[0][0], "slow=50;fast=0 J=1");
  EXPECT_EQ(plot.rows[0][1], "2");
  EXPECT_EQ(plot.rows[1][1], "10");
  EXPECT_EQ(plot.rows[2][0], "slow=5;fast=45 J=1");
}

TEST(Plot, EngagementTrackingRows) {
  auto spec = parse_sweep("steps: 20\nsweep:\n  replicates: 1\n  axes:\n    - {param: classes.*.k, values: [4, 8]}\n");
  const auto summary = summary_for(spec);
  const auto plot = plot_table(summary, "engagement-tracking");
  EXPECT_EQ(plot.header, (std::vector<std::string>{"series", "theta_mean", "xi_mean", "k"}));
  ASSERT_EQ(plot.rows.size(), 2u);
  for (const auto& row : plot.rows) {
    const auto k = row[3];
    const std::size_t p = k == "4" ? 0 : 1;
    EXPECT_EQ(row[1], summary.cell(p, "theta_mean"));
    EXPECT_EQ(row[2], summary.cell(p, "xi_mean"));
  }
}

TEST(Plot, EmptySummaryWritesHeadersOnly) {
  const auto dir = std::filesystem::temp_directory_path() / "swarmtrack_plot_empty";
  std::filesystem::remove_all(dir);
  const auto summary = summary_table(SweepResult{});
  for (const auto& family : plot_families()) {
    const auto files = emit_plot_data(summary, family, dir, true);
    ASSERT_EQ(files.size(), 2u);
    const auto table = read_csv(files[0]);
    EXPECT_FALSE(table.header.empty());
    EXPECT_TRUE(table.rows.empty());
    std::ifstream svg(files[1]);
    std::string first;
    std::getline(svg, first);
    EXPECT_EQ(first.rfind("<svg", 0), 0u);
  }
  std::filesystem::remove_all(dir);
}

TEST(Plot, UnknownFamilyIsAnError) {
  EXPECT_THROW(plot_table(CsvTable{}, "histogram"), std::invalid_argument);
}

TEST(Presets, AllParseAndEnumerate) {
  for (const auto& p : builtin_presets()) {
    const auto spec = p.spec();
    EXPECT_EQ(spec.replicates, 5) << p.name;
    EXPECT_FALSE(enumerate_runs(spec).empty()) << p.name;
    EXPECT_NE(std::find(plot_families().begin(), plot_families().end(), p.plot_family), plot_families().end());
    EXPECT_EQ(parse_config(dump_sweep(spec)).index(), 1u) << p.name;
  }
  EXPECT_EQ(enumerate_runs(find_preset("connectivity").spec()).size(), 90u);
  EXPECT_THROW(find_preset("nope"), std::invalid_argument);
}

}  // namespace
}  // namespace swarmtrack::harness
