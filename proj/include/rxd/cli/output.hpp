#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rxd/dynamics.hpp"

namespace rxd::cli {

inline constexpr const char* kCsvSchema = "# rxdlab-trajectory v1";

/// Shortest decimal that round-trips to the same double; "inf", "-inf", "nan" otherwise.
std::string format_double(double v);

/// Column header of the trajectory CSV, without the trailing newline.
std::string csv_header();
std::string csv_row(const DiagnosticsRecord& r);
void write_trajectory_csv(std::ostream& out, std::span<const DiagnosticsRecord> records);
void write_trajectory_csv(const std::string& path, std::span<const DiagnosticsRecord> records);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label = "t";
  std::string y_label;
  bool log_y = false;
};

/// Standalone SVG line plot, one polyline per series. Throws ParameterError on
/// an empty series list, a series with fewer than two points, mismatched
/// lengths, non-finite values, or a nonpositive value on a log axis.
std::string render_svg_lineplot(std::span<const Series> series, const PlotOptions& options = {});
void emit_svg_lineplot(std::span<const Series> series, const std::string& path, const PlotOptions& options = {});

}  // namespace rxd::cli
