// Copyright 2026 The narrative-net Authors
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

#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace narnet {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 56.0;
constexpr double kRight = 620.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 360.0;

const char* const kPalette[] = {"#3366cc", "#cc3333", "#33aa55", "#aa7700"};

std::string fmt(const char* pattern, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, pattern, value);
  return buffer;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
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

void line(std::string& svg, double x1, double y1, double x2, double y2, const char* style) {
  svg += "<line x1=\"" + fmt("%.2f", x1) + "\" y1=\"" + fmt("%.2f", y1) + "\" x2=\"" +
         fmt("%.2f", x2) + "\" y2=\"" + fmt("%.2f", y2) + "\" " + style + "/>\n";
}

void text(std::string& svg, double x, double y, const std::string& content, const char* style) {
  svg += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", y) + "\" " + style + ">" +
         escape_xml(content) + "</text>\n";
}

}  // namespace

std::string grouped_histogram_svg(const std::string& title,
                                  const std::vector<HistogramGroup>& groups, int bins) {
  if (bins < 1) bins = 1;

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (const HistogramGroup& group : groups) {
    for (double v : group.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      any = true;
    }
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.0f", kWidth) +
         "\" height=\"" + fmt("%.0f", kHeight) + "\" viewBox=\"0 0 " + fmt("%.0f", kWidth) +
         " " + fmt("%.0f", kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  text(svg, kLeft, 24.0, title, "font-family=\"sans-serif\" font-size=\"16\"");

  if (!any) {
    text(svg, (kLeft + kRight) / 2.0 - 30.0, (kTop + kBottom) / 2.0, "no data",
         "font-family=\"sans-serif\" font-size=\"14\" fill=\"#888888\"");
    svg += "</svg>\n";
    return svg;
  }
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double span = hi - lo;

  // Shared binning; counts per group over the pooled range.
  std::vector<std::vector<int64_t>> counts;
  std::vector<double> means;
  std::vector<const HistogramGroup*> drawn;
  int64_t max_count = 1;
  for (const HistogramGroup& group : groups) {
    if (group.values.empty()) continue;
    std::vector<int64_t> c(bins, 0);
    double sum = 0.0;
    for (double v : group.values) {
      int bin = static_cast<int>((v - lo) / span * bins);
      bin = std::clamp(bin, 0, bins - 1);
      ++c[bin];
      sum += v;
    }
    for (int64_t b : c) max_count = std::max(max_count, b);
    counts.push_back(std::move(c));
    means.push_back(sum / static_cast<double>(group.values.size()));
    drawn.push_back(&group);
  }

  auto x_of = [&](double v) { return kLeft + (v - lo) / span * (kRight - kLeft); };
  auto y_of = [&](double count) {
    return kBottom - count / static_cast<double>(max_count) * (kBottom - kTop);
  };

  // Axes and ticks.
  line(svg, kLeft, kTop, kLeft, kBottom, "stroke=\"#000000\" stroke-width=\"1\"");
  line(svg, kLeft, kBottom, kRight, kBottom, "stroke=\"#000000\" stroke-width=\"1\"");
  for (int i = 0; i <= 4; ++i) {
    double count = static_cast<double>(max_count) * i / 4.0;
    double y = y_of(count);
    line(svg, kLeft - 4.0, y, kLeft, y, "stroke=\"#000000\" stroke-width=\"1\"");
    text(svg, 8.0, y + 4.0, fmt("%.6g", count),
         "font-family=\"sans-serif\" font-size=\"11\"");
  }
  for (int i = 0; i <= 4; ++i) {
    double v = lo + span * i / 4.0;
    double x = x_of(v);
    line(svg, x, kBottom, x, kBottom + 4.0, "stroke=\"#000000\" stroke-width=\"1\"");
    text(svg, x - 14.0, kBottom + 18.0, fmt("%.6g", v),
         "font-family=\"sans-serif\" font-size=\"11\"");
  }

  // Group outlines as bin-top steps, then the mean lines.
  for (size_t gi = 0; gi < drawn.size(); ++gi) {
    const char* color = kPalette[gi % (sizeof kPalette / sizeof kPalette[0])];
    std::string points;
    points += fmt("%.2f", x_of(lo)) + "," + fmt("%.2f", y_of(0.0));
    for (int b = 0; b < bins; ++b) {
      double x0 = x_of(lo + span * b / bins);
      double x1 = x_of(lo + span * (b + 1) / bins);
      double y = y_of(static_cast<double>(counts[gi][b]));
      points += " " + fmt("%.2f", x0) + "," + fmt("%.2f", y);
      points += " " + fmt("%.2f", x1) + "," + fmt("%.2f", y);
    }
    points += " " + fmt("%.2f", x_of(hi)) + "," + fmt("%.2f", y_of(0.0));
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";

    double mx = x_of(means[gi]);
    svg += "<line x1=\"" + fmt("%.2f", mx) + "\" y1=\"" + fmt("%.2f", kTop) + "\" x2=\"" +
           fmt("%.2f", mx) + "\" y2=\"" + fmt("%.2f", kBottom) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1\" stroke-dasharray=\"5,3\"/>\n";

    double ly = kTop + 14.0 + 16.0 * static_cast<double>(gi);
    line(svg, kRight - 110.0, ly - 4.0, kRight - 90.0, ly - 4.0,
         ("stroke=\"" + std::string(color) + "\" stroke-width=\"2\"").c_str());
    text(svg, kRight - 84.0, ly, drawn[gi]->label,
         "font-family=\"sans-serif\" font-size=\"12\"");
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace narnet
