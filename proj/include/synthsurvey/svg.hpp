// Copyright 2026 The synthsurvey Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Static line charts rendered as SVG text. Output depends only on the input
// data, so reruns produce identical files.

#ifndef SYNTHSURVEY_SVG_HPP
#define SYNTHSURVEY_SVG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace synthsurvey {

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
  bool dashed = false;
  /// Optional shaded band drawn behind the line: (x, low, high).
  std::vector<std::pair<double, std::pair<double, double>>> band;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  int width = 640;
  int height = 400;
};

/// Throws Error if no series has a finite point.
std::string render_line_plot(const PlotSpec& spec);

}  // namespace synthsurvey

#endif  // SYNTHSURVEY_SVG_HPP
