#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "rxd/cli/config.hpp"
#include "rxd/cli/output.hpp"

namespace rxd::cli {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 70;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg_lineplot(std::span<const Series> series, const PlotOptions& options) {
  if (series.empty()) throw ParameterError("svg: no series to plot");
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Series& s : series) {
    if (s.x.size() < 2 || s.x.size() != s.y.size()) {
      throw ParameterError("svg: series '" + s.label + "' needs at least two points and matching x/y lengths");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        throw ParameterError("svg: series '" + s.label + "' has a non-finite value");
      }
      if (options.log_y && !(s.y[i] > 0.0)) {
        throw ParameterError("svg: log scale needs positive values (series '" + s.label + "')");
      }
      const double y = options.log_y ? std::log10(s.y[i]) : s.y[i];
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - (y - ymin) / (ymax - ymin)) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) + "\" height=\"" + fixed(kHeight, 0) +
         "\" viewBox=\"0 0 " + fixed(kWidth, 0) + " " + fixed(kHeight, 0) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    svg += "<text x=\"" + fixed(kLeft + pw / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
           escape(options.title) + "</text>\n";
  }
  // Axes.
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop + ph) + "\" x2=\"" + fixed(kLeft + pw) + "\" y2=\"" +
         fixed(kTop + ph) + "\"/>\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" + fixed(kLeft) + "\" y2=\"" +
         fixed(kTop + ph) + "\"/>\n";
  svg += "</g>\n";
  // Ticks.
  svg += "<g fill=\"black\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + (xmax - xmin) * k / 4.0;
    svg += "<text x=\"" + fixed(px(xv)) + "\" y=\"" + fixed(kTop + ph + 16) + "\" text-anchor=\"middle\">" +
           tick_label(xv) + "</text>\n";
    const double yv = ymin + (ymax - ymin) * k / 4.0;
    const std::string label = options.log_y ? "1e" + tick_label(yv) : tick_label(yv);
    svg += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(py(yv) + 4) + "\" text-anchor=\"end\">" + label +
           "</text>\n";
  }
  svg += "<text x=\"" + fixed(kLeft + pw / 2) + "\" y=\"" + fixed(kHeight - 10) + "\" text-anchor=\"middle\">" +
         escape(options.x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + fixed(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fixed(kTop + ph / 2) + ")\">" + escape(options.y_label + (options.log_y ? " (log10)" : "")) + "</text>\n";
  svg += "</g>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % std::size(kPalette)];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[s].x.size(); ++i) {
      const double y = options.log_y ? std::log10(series[s].y[i]) : series[s].y[i];
      if (i) svg += ' ';
      svg += fixed(px(series[s].x[i])) + "," + fixed(py(y));
    }
    svg += "\"/>\n";
    const double ly = kTop + 10 + 16.0 * static_cast<double>(s);
    svg += "<text x=\"" + fixed(kLeft + pw + 12) + "\" y=\"" + fixed(ly + 4) + "\" fill=\"" + color + "\">" +
           escape(series[s].label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void emit_svg_lineplot(std::span<const Series> series, const std::string& path, const PlotOptions& options) {
  const std::string svg = render_svg_lineplot(series, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("output.svg_prefix: cannot open " + path + " for writing");
  out << svg;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace rxd::cli
