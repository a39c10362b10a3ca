#include "swarmtrack/harness/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace swarmtrack::harness {

namespace {

using Row = std::size_t;

// Field of the first class that has agents, e.g. the k of a homogeneous swarm.
std::string populated_class_field(const CsvTable& t, Row r, const std::string& field) {
  for (const auto& col : t.header) {
    if (col.starts_with("classes.") && col.ends_with(".count") && t.number(r, col) > 0) {
      const auto base = col.substr(0, col.size() - std::string_view(".count").size());
      return t.cell(r, base + "." + field);
    }
  }
  return "nan";
}

std::string class_field_or(const CsvTable& t, Row r, const std::string& col, const char* fallback) {
  return t.has_column(col) ? t.cell(r, col) : fallback;
}

struct Family {
  std::string name;
  std::vector<std::string> keys;  // leading columns; keys[x_index] is the x axis
  std::size_t x_index;
  std::function<std::vector<std::string>(const CsvTable&, Row)> key_values;
  bool scatter = false;
  bool with_stats = true;  // append xi/theta mean and sd
};

const std::vector<Family>& families() {
  static const std::vector<Family> table = {
      {"connectivity", {"series", "k"}, 1,
       [](const CsvTable& t, Row r) {
         return std::vector<std::string>{t.cell(r, "composition") + " J=" + t.cell(r, "targets.count"),
                                         populated_class_field(t, r, "k")};
       }},
      {"engagement-tracking", {"series", "theta_mean", "xi_mean", "k"}, 1,
       [](const CsvTable& t, Row r) {
         return std::vector<std::string>{t.cell(r, "composition") + " J=" + t.cell(r, "targets.count"),
                                         t.cell(r, "theta_mean"), t.cell(r, "xi_mean"),
                                         populated_class_field(t, r, "k")};
       },
       true, false},
      {"memory", {"series", "t_mem"}, 1,
       [](const CsvTable& t, Row r) {
         return std::vector<std::string>{t.cell(r, "composition") + " k=" + populated_class_field(t, r, "k"),
                                         populated_class_field(t, r, "t_mem")};
       }},
      {"composition", {"series", "n_fast"}, 1,
       [](const CsvTable& t, Row r) {
         return std::vector<std::string>{"k=" + populated_class_field(t, r, "k") + " J=" + t.cell(r, "targets.count"),
                                         class_field_or(t, r, "classes.fast.count", "0")};
       }},
      {"density", {"series", "density", "side_length"}, 1,
       [](const CsvTable& t, Row r) {
         return std::vector<std::string>{t.cell(r, "composition"), t.cell(r, "density"),
                                         t.cell(r, "arena.side_length")};
       }},
      {"targets", {"series", "targets"}, 1,
       [](const CsvTable& t, Row r) {
         return std::vector<std::string>{t.cell(r, "composition") + " k=" + populated_class_field(t, r, "k"),
                                         t.cell(r, "targets.count")};
       }},
      {"differentiated-k", {"series", "k_fast", "k_slow"}, 1,
       [](const CsvTable& t, Row r) {
         const auto ks = class_field_or(t, r, "classes.slow.k", "nan");
         return std::vector<std::string>{"k_slow=" + ks, class_field_or(t, r, "classes.fast.k", "nan"), ks};
       }},
      {"memory-speed", {"series", "t_mem", "v_max"}, 1,
       [](const CsvTable& t, Row r) {
         const auto v = populated_class_field(t, r, "v_max");
         return std::vector<std::string>{"v_max=" + v, populated_class_field(t, r, "t_mem"), v};
       }},
  };
  return table;
}

const Family& find_family(std::string_view name) {
  for (const auto& f : families()) {
    if (f.name == name) {
      return f;
    }
  }
  std::string known;
  for (const auto& f : families()) {
    known += (known.empty() ? "" : ", ") + f.name;
  }
  throw std::invalid_argument("unknown plot family '" + std::string(name) + "' (known: " + known + ")");
}

double to_double(const std::string& text) {
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    return std::nan("");
  }
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& plot_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : families()) {
      out.push_back(f.name);
    }
    return out;
  }();
  return names;
}

CsvTable plot_table(const CsvTable& summary, std::string_view family) {
  const auto& fam = find_family(family);
  CsvTable out;
  out.header = fam.keys;
  if (fam.with_stats) {
    out.header.insert(out.header.end(), {"xi_mean", "xi_sd", "theta_mean", "theta_sd"});
  }
  for (Row r = 0; r < summary.rows.size(); ++r) {
    auto row = fam.key_values(summary, r);
    if (fam.with_stats) {
      for (const char* col : {"xi_mean", "xi_sd", "theta_mean", "theta_sd"}) {
        row.push_back(summary.cell(r, col));
      }
    }
    out.rows.push_back(std::move(row));
  }
  // Series keep the order they first appear in; points within one go by x.
  std::map<std::string, std::size_t> series_rank;
  for (const auto& row : out.rows) {
    series_rank.emplace(row[0], series_rank.size());
  }
  const auto x = fam.x_index;
  std::stable_sort(out.rows.begin(), out.rows.end(), [&](const auto& a, const auto& b) {
    if (a[0] != b[0]) {
      return series_rank.at(a[0]) < series_rank.at(b[0]);
    }
    return to_double(a[x]) < to_double(b[x]);
  });
  return out;
}

std::string render_svg(const CsvTable& plot, std::string_view family) {
  const auto& fam = find_family(family);
  const std::string x_name = fam.keys[fam.x_index];
  const std::string y_name = "xi_mean";
  const auto xc = plot.column(x_name);
  const auto yc = plot.column(y_name);

  std::map<std::string, std::vector<std::pair<double, double>>> series;
  double x0 = INFINITY, x1 = -INFINITY, y0 = 0.0, y1 = 1.0;
  for (const auto& row : plot.rows) {
    const double x = to_double(row[xc]);
    const double y = to_double(row[yc]);
    if (!std::isfinite(x) || !std::isfinite(y)) {
      continue;
    }
    series[row[0]].emplace_back(x, y);
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
  if (!(x0 < x1)) {
    x0 = std::isfinite(x0) ? x0 - 1.0 : 0.0;
    x1 = x0 + 2.0;
  }

  constexpr double W = 640, H = 420, ML = 60, MR = 180, MT = 30, MB = 50;
  auto sx = [&](double x) { return ML + (x - x0) / (x1 - x0) * (W - ML - MR); };
  auto sy = [&](double y) { return H - MB - (y - y0) / (y1 - y0) * (H - MT - MB); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << ML << "\" y=\"18\" font-size=\"13\">" << escape_xml(std::string(family)) << "</text>\n";
  svg << "<line x1=\"" << ML << "\" y1=\"" << sy(y0) << "\" x2=\"" << W - MR << "\" y2=\"" << sy(y0)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << ML << "\" y1=\"" << sy(y0) << "\" x2=\"" << ML << "\" y2=\"" << MT
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x0 + (x1 - x0) * i / 5.0;
    const double yv = y0 + (y1 - y0) * i / 5.0;
    svg << "<text x=\"" << sx(xv) << "\" y=\"" << H - MB + 16 << "\" text-anchor=\"middle\">" << xv
        << "</text>\n";
    svg << "<text x=\"" << ML - 6 << "\" y=\"" << sy(yv) + 4 << "\" text-anchor=\"end\">" << yv << "</text>\n";
  }
  svg << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
      << escape_xml(x_name) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << (MT + H - MB) / 2 << "\" transform=\"rotate(-90 16 " << (MT + H - MB) / 2
      << ")\" text-anchor=\"middle\">" << y_name << "</text>\n";

  std::size_t s = 0;
  for (const auto& [label, points] : series) {
    const char* color = palette[s % std::size(palette)];
    if (!fam.scatter && points.size() > 1) {
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : points) {
        svg << sx(x) << ',' << sy(y) << ' ';
      }
      svg << "\"/>\n";
    }
    for (const auto& [x, y] : points) {
      svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = MT + 16.0 * static_cast<double>(s);
    svg << "<rect x=\"" << W - MR + 12 << "\" y=\"" << ly << "\" width=\"10\" height=\"10\" fill=\"" << color
        << "\"/>\n";
    svg << "<text x=\"" << W - MR + 26 << "\" y=\"" << ly + 9 << "\">" << escape_xml(label) << "</text>\n";
    ++s;
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> emit_plot_data(const CsvTable& summary, std::string_view family,
                                                  const std::filesystem::path& out_dir, bool svg) {
  const auto table = plot_table(summary, family);
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;

  const auto csv_path = out_dir / (std::string(family) + ".csv");
  std::ofstream csv(csv_path);
  if (!csv) {
    throw std::runtime_error("cannot write " + csv_path.string());
  }
  write_csv(csv, table);
  written.push_back(csv_path);

  if (svg) {
    const auto svg_path = out_dir / (std::string(family) + ".svg");
    std::ofstream out(svg_path);
    if (!out) {
      throw std::runtime_error("cannot write " + svg_path.string());
    }
    out << render_svg(table, family);
    written.push_back(svg_path);
  }
  return written;
}

}  // namespace swarmtrack::harness
