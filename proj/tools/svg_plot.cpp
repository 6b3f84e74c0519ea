// Copyright 2026 The EGTA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace egta_cli {
namespace {

constexpr double kWidth = 720, kHeight = 460;
constexpr double kLeft = 70, kRight = 180, kTop = 40, kBottom = 50;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string Escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string Fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

struct Axis {
  double lo, hi;
  bool log;
  double Map(double v, double pixel_lo, double pixel_hi) const {
    const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
    return pixel_lo + t * (pixel_hi - pixel_lo);
  }
  double Value(double t) const {
    const double raw = lo + t * (hi - lo);
    return log ? std::pow(10.0, raw) : raw;
  }
};

Axis MakeAxis(double lo, double hi, bool log) {
  if (log) {
    lo = std::log10(lo);
    hi = std::log10(hi);
  }
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi, log};
}

}  // namespace

std::string RenderSvg(const PlotSpec& spec, const std::vector<Series>& series) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!spec.log_x || x > 0) &&
           (!spec.log_y || y > 0);
  };
  for (const Series& s : series) {
    for (auto [x, y] : s.points) {
      if (!usable(x, y)) continue;
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!std::isfinite(x_lo)) x_lo = y_lo = 1, x_hi = y_hi = 2;
  const Axis ax = MakeAxis(x_lo, x_hi, spec.log_x);
  const Axis ay = MakeAxis(y_lo, y_hi, spec.log_y);
  const double px0 = kLeft, px1 = kWidth - kRight, py0 = kHeight - kBottom, py1 = kTop;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << Escape(spec.title) << "</text>\n";
  svg << "<rect x=\"" << px0 << "\" y=\"" << py1 << "\" width=\"" << px1 - px0
      << "\" height=\"" << py0 - py1 << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double t = i / 4.0;
    const double gx = px0 + t * (px1 - px0), gy = py0 + t * (py1 - py0);
    svg << "<line x1=\"" << gx << "\" y1=\"" << py0 << "\" x2=\"" << gx << "\" y2=\"" << py1
        << "\" stroke=\"#ddd\"/>\n";
    svg << "<line x1=\"" << px0 << "\" y1=\"" << gy << "\" x2=\"" << px1 << "\" y2=\"" << gy
        << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << gx << "\" y=\"" << py0 + 16 << "\" text-anchor=\"middle\">"
        << Fmt(ax.Value(t)) << "</text>\n";
    svg << "<text x=\"" << px0 - 6 << "\" y=\"" << gy + 4 << "\" text-anchor=\"end\">"
        << Fmt(ay.Value(t)) << "</text>\n";
  }
  svg << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">" << Escape(spec.x_label) << "</text>\n";
  svg << "<text transform=\"translate(16," << (py0 + py1) / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << Escape(spec.y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    std::ostringstream path;
    for (auto [x, y] : series[i].points) {
      if (!usable(x, y)) continue;
      const double sx = ax.Map(x, px0, px1), sy = ay.Map(y, py0, py1);
      path << sx << ',' << sy << ' ';
      svg << "<circle cx=\"" << sx << "\" cy=\"" << sy << "\" r=\"2.5\" fill=\"" << color
          << "\"/>\n";
    }
    if (!spec.markers_only) {
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
          << path.str() << "\"/>\n";
    }
    const double ly = py1 + 14 + 16 * static_cast<double>(i);
    svg << "<rect x=\"" << px1 + 12 << "\" y=\"" << ly - 9 << "\" width=\"10\" height=\"10\" fill=\""
        << color << "\"/>\n";
    svg << "<text x=\"" << px1 + 28 << "\" y=\"" << ly << "\">" << Escape(series[i].name)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace egta_cli
