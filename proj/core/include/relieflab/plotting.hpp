#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "relieflab/experiment.hpp"

namespace relieflab {

enum class PlotMode { Separability, Accumulated };

struct PlotSpec {
  PlotMode mode = PlotMode::Separability;
  std::string problem_filter;  // empty = every problem in the records
  int width = 960;
  int height = 600;
};

// Plotted points of one problem: per algorithm, the per-x averaged
// separability (or its running sum in accumulated mode).
struct CurveTable {
  std::string problem;
  std::string mode;
  std::vector<int> x;
  std::vector<std::string> algorithms;
  std::vector<std::vector<double>> columns;  // [algorithm][point]

  bool operator==(const CurveTable&) const = default;
};

// One table per problem present in the records (restricted by the filter),
// NaN records skipped. Throws when the filter matches nothing or the records
// are empty.
std::vector<CurveTable> build_curve_tables(
    const std::vector<ExperimentRecord>& records, const PlotSpec& spec);

// Whitespace-separated data file with a comment header; the exact points the
// image is drawn from.
void write_curve_data(const CurveTable& table, const std::filesystem::path& path);
CurveTable read_curve_data(const std::filesystem::path& path);

// Standalone SVG line chart, one polyline per algorithm. Pure function of
// the table and spec.
std::string render_svg(const CurveTable& table, const PlotSpec& spec);

// Writes <problem>_<mode>.svg and <problem>_<mode>.dat per table into
// out_dir; returns the paths written.
std::vector<std::filesystem::path> write_plot_files(
    const std::vector<ExperimentRecord>& records, const PlotSpec& spec,
    const std::filesystem::path& out_dir);

}  // namespace relieflab
