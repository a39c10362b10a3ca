#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace swarmtrack::harness {

/// Header plus rows of string cells. Cells never contain commas or quotes in
/// the files this project writes, so no quoting is performed.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column, or npos.
  [[nodiscard]] std::size_t column(std::string_view name) const;
  [[nodiscard]] bool has_column(std::string_view name) const { return column(name) != npos; }
  /// Throws std::out_of_range naming the column when absent.
  [[nodiscard]] const std::string& cell(std::size_t row, std::string_view name) const;
  [[nodiscard]] double number(std::size_t row, std::string_view name) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace swarmtrack::harness
