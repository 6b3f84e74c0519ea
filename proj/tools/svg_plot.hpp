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

#ifndef EGTA_TOOLS_SVG_PLOT_HPP_
#define EGTA_TOOLS_SVG_PLOT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace egta_cli {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  bool markers_only = false;
};

// Standalone SVG line chart. Non-positive values are dropped on log axes.
std::string RenderSvg(const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace egta_cli

#endif  // EGTA_TOOLS_SVG_PLOT_HPP_
