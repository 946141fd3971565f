// Copyright 2026 the hyperlap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Plain-text artifact writers: fixed-precision reals for CSV, and a minimal
// self-contained SVG line plot.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hyperlap {

/// 17 significant digits, shortest of fixed/scientific ("%.17g").
std::string format_real(double v);

struct PlotSeries {
    std::string label;
    std::string color;  // any SVG colour string
    std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
};

inline constexpr int kSvgWidth = 960;
inline constexpr int kSvgHeight = 640;

/// Linear axes with tick labels and one <polyline> per series.
void write_svg(const PlotSpec& plot, std::ostream& out);

/// Escapes &, <, >, " for XML text and attributes.
std::string xml_escape(const std::string& s);

}  // namespace hyperlap
