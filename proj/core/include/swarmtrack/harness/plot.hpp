#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "swarmtrack/harness/csv.hpp"

namespace swarmtrack::harness {

/// connectivity, engagement-tracking, memory, composition, density, targets,
/// differentiated-k, memory-speed.
const std::vector<std::string>& plot_families();

/// Projects a summary table onto the columns one experiment family plots.
/// Rows are grouped by series and ordered by x. Throws std::invalid_argument
/// for an unknown family.
CsvTable plot_table(const CsvTable& summary, std::string_view family);

/// Minimal static chart of a plot table: lines per series, or a scatter for
/// engagement-tracking.
std::string render_svg(const CsvTable& plot, std::string_view family);

/// Writes <family>.csv (and <family>.svg when `svg`) into `out_dir`.
/// Returns the files written.
std::vector<std::filesystem::path> emit_plot_data(const CsvTable& summary, std::string_view family,
                                                  const std::filesystem::path& out_dir, bool svg);

}  // namespace swarmtrack::harness
