#include "relieflab/plotting.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace relieflab {

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

std::string fixed2(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

const char* mode_name(PlotMode mode) {
  return mode == PlotMode::Separability ? "separability" : "accumulated";
}

}  // namespace

std::vector<CurveTable> build_curve_tables(
    const std::vector<ExperimentRecord>& records, const PlotSpec& spec) {
  if (records.empty()) throw std::invalid_argument("plot: no records");

  // problem -> algorithm -> x -> (sum, count); NaN separabilities (degenerate
  // cells) contribute nothing.
  std::map<GeneratorKind, std::map<ReliefVariant, std::map<int, std::pair<double, int>>>>
      grouped;
  for (const ExperimentRecord& record : records) {
    if (!spec.problem_filter.empty() &&
        kind_name(record.problem) != spec.problem_filter)
      continue;
    if (std::isnan(record.separability)) continue;
    auto& cell =
        grouped[record.problem][record.algorithm][record.n_relevant + record.n_irrelevant];
    cell.first += record.separability;
    cell.second += 1;
  }
  if (grouped.empty())
    throw std::invalid_argument("plot: no records match problem filter '" +
                                spec.problem_filter + "'");

  std::vector<CurveTable> tables;
  for (const auto& [problem, by_algorithm] : grouped) {
    CurveTable table;
    table.problem = std::string(kind_name(problem));
    table.mode = mode_name(spec.mode);

    std::set<int> xs;
    for (const auto& [algorithm, points] : by_algorithm)
      for (const auto& [x, sum_count] : points) xs.insert(x);
    table.x.assign(xs.begin(), xs.end());

    for (const auto& [algorithm, points] : by_algorithm) {
      table.algorithms.emplace_back(variant_name(algorithm));
      std::vector<double> column;
      column.reserve(table.x.size());
      double running = 0.0;
      for (int x : table.x) {
        const auto found = points.find(x);
        if (found == points.end()) {
          column.push_back(spec.mode == PlotMode::Accumulated
                               ? running
                               : std::numeric_limits<double>::quiet_NaN());
          continue;
        }
        const double mean = found->second.first / found->second.second;
        if (spec.mode == PlotMode::Accumulated) {
          running += mean;
          column.push_back(running);
        } else {
          column.push_back(mean);
        }
      }
      table.columns.push_back(std::move(column));
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

void write_curve_data(const CurveTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_curve_data: cannot open " + path.string());
  out << "# relieflab curve data v1\n";
  out << "# problem: " << table.problem << '\n';
  out << "# mode: " << table.mode << '\n';
  out << "# x";
  for (const std::string& algorithm : table.algorithms) out << ' ' << algorithm;
  out << '\n';
  for (std::size_t row = 0; row < table.x.size(); ++row) {
    out << table.x[row];
    for (const auto& column : table.columns) out << ' ' << shortest(column[row]);
    out << '\n';
  }
  if (!out.flush())
    throw std::runtime_error("write_curve_data: write failed for " + path.string());
}

CurveTable read_curve_data(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_curve_data: cannot open " + path.string());
  CurveTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# problem: ", 0) == 0) {
      table.problem = line.substr(11);
    } else if (line.rfind("# mode: ", 0) == 0) {
      table.mode = line.substr(8);
    } else if (line.rfind("# x", 0) == 0) {
      std::istringstream columns(line.substr(3));
      std::string name;
      while (columns >> name) table.algorithms.push_back(name);
      table.columns.assign(table.algorithms.size(), {});
      header_seen = true;
    } else if (line[0] != '#') {
      if (!header_seen)
        throw std::runtime_error("read_curve_data: missing column header in " +
                                 path.string());
      std::istringstream row(line);
      int x = 0;
      row >> x;
      table.x.push_back(x);
      for (auto& column : table.columns) {
        std::string cell;
        if (!(row >> cell))
          throw std::runtime_error("read_curve_data: short row in " + path.string());
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc{} || ptr != cell.data() + cell.size())
          throw std::runtime_error("read_curve_data: bad value '" + cell + "'");
        column.push_back(v);
      }
    }
  }
  if (!header_seen)
    throw std::runtime_error("read_curve_data: no data header in " + path.string());
  return table;
}

namespace {

struct Ticks {
  double lo, hi, step;
};

// Tick step of the form {1,2,5}*10^k giving roughly `target` intervals.
Ticks nice_ticks(double lo, double hi, int target) {
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double raw = (hi - lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    step = mult * mag;
    if (step >= raw) break;
  }
  return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

const char* kSeriesColors[] = {"#1b6ca8", "#d1495b", "#2e8b57",
                               "#8f6fbf", "#c08a2d", "#3b3b3b"};

}  // namespace

std::string render_svg(const CurveTable& table, const PlotSpec& spec) {
  const int width = spec.width;
  const int height = spec.height;
  const double margin_left = 72, margin_right = 24, margin_top = 48, margin_bottom = 56;
  const double plot_w = width - margin_left - margin_right;
  const double plot_h = height - margin_top - margin_bottom;

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (int x : table.x) {
    x_lo = std::min(x_lo, static_cast<double>(x));
    x_hi = std::max(x_hi, static_cast<double>(x));
  }
  for (const auto& column : table.columns)
    for (double v : column) {
      if (std::isnan(v)) continue;
      y_lo = std::min(y_lo, v);
      y_hi = std::max(y_hi, v);
    }
  if (!std::isfinite(x_lo) || !std::isfinite(y_lo))
    throw std::invalid_argument("render_svg: table has no plottable points");

  const Ticks xt = nice_ticks(x_lo, x_hi, 8);
  const Ticks yt = nice_ticks(y_lo, y_hi, 6);
  auto sx = [&](double x) {
    return margin_left + (x - xt.lo) / (xt.hi - xt.lo) * plot_w;
  };
  auto sy = [&](double y) {
    return margin_top + plot_h - (y - yt.lo) / (yt.hi - yt.lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << table.problem << " — "
      << table.mode << "</text>\n";

  // grid + ticks
  svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (double x = xt.lo; x <= xt.hi + 1e-9; x += xt.step) {
    const double px = sx(x);
    svg << "<line x1=\"" << fixed2(px) << "\" y1=\"" << fixed2(margin_top) << "\" x2=\""
        << fixed2(px) << "\" y2=\"" << fixed2(margin_top + plot_h)
        << "\" stroke=\"#e0e0e0\"/>\n";
    svg << "<text x=\"" << fixed2(px) << "\" y=\"" << fixed2(margin_top + plot_h + 18)
        << "\" text-anchor=\"middle\">" << shortest(x) << "</text>\n";
  }
  for (double y = yt.lo; y <= yt.hi + 1e-9; y += yt.step) {
    const double py = sy(y);
    svg << "<line x1=\"" << fixed2(margin_left) << "\" y1=\"" << fixed2(py) << "\" x2=\""
        << fixed2(margin_left + plot_w) << "\" y2=\"" << fixed2(py)
        << "\" stroke=\"#e0e0e0\"/>\n";
    svg << "<text x=\"" << fixed2(margin_left - 8) << "\" y=\"" << fixed2(py + 4)
        << "\" text-anchor=\"end\">" << shortest(y) << "</text>\n";
  }
  svg << "</g>\n";

  // axes
  svg << "<rect x=\"" << fixed2(margin_left) << "\" y=\"" << fixed2(margin_top)
      << "\" width=\"" << fixed2(plot_w) << "\" height=\"" << fixed2(plot_h)
      << "\" fill=\"none\" stroke=\"#555\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << "total attributes (n + m)</text>\n";
  svg << "<text x=\"18\" y=\"" << height / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << height / 2 << ")\">"
      << (table.mode == "accumulated" ? "accumulated separability" : "separability")
      << "</text>\n";

  // curves; NaN gaps split the polyline
  for (std::size_t s = 0; s < table.columns.size(); ++s) {
    const char* color = kSeriesColors[s % std::size(kSeriesColors)];
    const auto& column = table.columns[s];
    std::vector<std::pair<double, double>> segment;
    auto flush = [&] {
      if (segment.size() >= 2) {
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [px, py] : segment) svg << fixed2(px) << ',' << fixed2(py) << ' ';
        svg << "\"/>\n";
      } else if (segment.size() == 1) {
        svg << "<circle cx=\"" << fixed2(segment[0].first) << "\" cy=\""
            << fixed2(segment[0].second) << "\" r=\"2\" fill=\"" << color << "\"/>\n";
      }
      segment.clear();
    };
    for (std::size_t row = 0; row < table.x.size(); ++row) {
      if (std::isnan(column[row])) {
        flush();
        continue;
      }
      segment.emplace_back(sx(table.x[row]), sy(column[row]));
    }
    flush();
  }

  // legend
  const double legend_x = margin_left + plot_w - 130;
  double legend_y = margin_top + 14;
  svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t s = 0; s < table.algorithms.size(); ++s) {
    const char* color = kSeriesColors[s % std::size(kSeriesColors)];
    svg << "<line x1=\"" << fixed2(legend_x) << "\" y1=\"" << fixed2(legend_y - 4)
        << "\" x2=\"" << fixed2(legend_x + 22) << "\" y2=\"" << fixed2(legend_y - 4)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fixed2(legend_x + 28) << "\" y=\"" << fixed2(legend_y) << "\">"
        << table.algorithms[s] << "</text>\n";
    legend_y += 18;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> write_plot_files(
    const std::vector<ExperimentRecord>& records, const PlotSpec& spec,
    const std::filesystem::path& out_dir) {
  const std::vector<CurveTable> tables = build_curve_tables(records, spec);
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const CurveTable& table : tables) {
    const std::string stem = table.problem + "_" + table.mode;
    const std::filesystem::path data_path = out_dir / (stem + ".dat");
    const std::filesystem::path svg_path = out_dir / (stem + ".svg");
    write_curve_data(table, data_path);
    std::ofstream svg(svg_path);
    if (!svg) throw std::runtime_error("write_plot_files: cannot open " + svg_path.string());
    svg << render_svg(table, spec);
    if (!svg.flush())
      throw std::runtime_error("write_plot_files: write failed for " + svg_path.string());
    written.push_back(data_path);
    written.push_back(svg_path);
  }
  return written;
}

}  // namespace relieflab
