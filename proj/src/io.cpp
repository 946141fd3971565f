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

#include "hyperlap/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace hyperlap {
namespace {

constexpr double kLeft = 90.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", std::fabs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

// About five ticks at 1, 2 or 5 times a power of ten.
std::vector<double> nice_ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double f : {1.0, 2.0, 5.0, 10.0}) {
        step = f * mag;
        if (step >= raw) break;
    }
    std::vector<double> ticks;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) ticks.push_back(t);
    return ticks;
}

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
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

void write_svg(const PlotSpec& plot, std::ostream& out) {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : plot.series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = ymin = 0.0;
        xmax = ymax = 1.0;
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double w = kSvgWidth - kLeft - kRight;
    const double h = kSvgHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * w; };
    auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * h; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth << "\" height=\"" << kSvgHeight
        << "\" viewBox=\"0 0 " << kSvgWidth << ' ' << kSvgHeight << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << kSvgWidth << "\" height=\"" << kSvgHeight << "\" fill=\"white\"/>\n"
        << "<text x=\"" << kSvgWidth / 2 << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"18\">" << xml_escape(plot.title) << "</text>\n";

    out << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop + h) << "\" x2=\"" << coord(kLeft + w)
        << "\" y2=\"" << coord(kTop + h) << "\"/>\n"
        << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop) << "\" x2=\"" << coord(kLeft)
        << "\" y2=\"" << coord(kTop + h) << "\"/>\n";
    for (double t : nice_ticks(xmin, xmax)) {
        out << "<line x1=\"" << coord(px(t)) << "\" y1=\"" << coord(kTop + h) << "\" x2=\"" << coord(px(t))
            << "\" y2=\"" << coord(kTop + h + 6) << "\"/>\n";
    }
    for (double t : nice_ticks(ymin, ymax)) {
        out << "<line x1=\"" << coord(kLeft - 6) << "\" y1=\"" << coord(py(t)) << "\" x2=\"" << coord(kLeft)
            << "\" y2=\"" << coord(py(t)) << "\"/>\n";
    }
    out << "</g>\n<g id=\"tick-labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (double t : nice_ticks(xmin, xmax)) {
        out << "<text x=\"" << coord(px(t)) << "\" y=\"" << coord(kTop + h + 22)
            << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : nice_ticks(ymin, ymax)) {
        out << "<text x=\"" << coord(kLeft - 10) << "\" y=\"" << coord(py(t) + 4) << "\" text-anchor=\"end\">"
            << tick_label(t) << "</text>\n";
    }
    out << "</g>\n"
        << "<text x=\"" << coord(kLeft + w / 2) << "\" y=\"" << kSvgHeight - 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(plot.x_label)
        << "</text>\n"
        << "<text x=\"20\" y=\"" << coord(kTop + h / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"14\" transform=\"rotate(-90 20 " << coord(kTop + h / 2) << ")\">" << xml_escape(plot.y_label)
        << "</text>\n";

    double legend_y = kTop + 15;
    for (const auto& s : plot.series) {
        out << "<polyline fill=\"none\" stroke=\"" << xml_escape(s.color) << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [x, y] : s.points) {
            if (!first) out << ' ';
            out << coord(px(x)) << ',' << coord(py(y));
            first = false;
        }
        out << "\"><title>" << xml_escape(s.label) << "</title></polyline>\n";
        out << "<text x=\"" << coord(kLeft + 15) << "\" y=\"" << coord(legend_y)
            << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"" << xml_escape(s.color) << "\">"
            << xml_escape(s.label) << "</text>\n";
        legend_y += 18;
    }
    out << "</svg>\n";
}

}  // namespace hyperlap
