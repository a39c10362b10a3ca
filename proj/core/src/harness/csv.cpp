#include "swarmtrack/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace swarmtrack::harness {

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) {
      return i;
    }
  }
  return npos;
}

const std::string& CsvTable::cell(std::size_t row, std::string_view name) const {
  const auto c = column(name);
  if (c == npos) {
    throw std::out_of_range("missing column '" + std::string(name) + "'");
  }
  return rows.at(row).at(c);
}

double CsvTable::number(std::size_t row, std::string_view name) const {
  const auto& text = cell(row, name);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    if (text == "nan") {
      return std::nan("");
    }
    throw std::invalid_argument("column '" + std::string(name) + "' is not numeric: '" + text + "'");
  }
  return value;
}

std::string format_number(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) {
        out << ',';
      }
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) {
    line(row);
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    cells.emplace_back();
  }
  return cells;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    return table;
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  table.header = split(line);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    auto cells = split(line);
    if (cells.size() != table.header.size()) {
      throw std::runtime_error("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  return read_csv(in);
}

}  // namespace swarmtrack::harness
