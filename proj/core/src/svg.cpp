// Copyright 2026 The posebench Authors
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

#include "posebench/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

namespace posebench {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
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

/// Round `v` up to 1, 2 or 5 times a power of ten.
double nice_ceiling(double v) {
  if (!(v > 0.0)) return 1.0;
  const double p = std::pow(10.0, std::floor(std::log10(v)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (v <= m * p) return m * p;
  }
  return 10.0 * p;
}

std::string header(const std::string& title) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
       num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
       "\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">" + escape(title) + "</text>\n";
  return s;
}

std::string axes(double y_max, const std::string& x_label, const std::string& y_label) {
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  std::string s;
  s += "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y0) + "\"/>\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) + "\"/>\n";
  s += "</g>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = y_max * i / 5.0;
    const double y = y0 - (y0 - y1) * i / 5.0;
    s += "<line x1=\"" + num(x0 - 4) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(y + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(v) + "</text>\n";
  }
  s += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 15) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + escape(x_label) + "</text>\n";
  s += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"12\" transform=\"rotate(-90 18 " + num((y0 + y1) / 2) + ")\">" + escape(y_label) +
       "</text>\n";
  return s;
}

std::string legend_entry(std::size_t i, const std::string& label, const std::string& color,
                         const std::string& dash, bool bar) {
  const double x = kWidth - kRight + 15;
  const double y = kTop + 10 + 18.0 * static_cast<double>(i);
  std::string s;
  if (bar) {
    s += "<rect x=\"" + num(x) + "\" y=\"" + num(y - 8) + "\" width=\"14\" height=\"10\" fill=\"" + color + "\"/>\n";
  } else {
    s += "<line x1=\"" + num(x) + "\" y1=\"" + num(y - 3) + "\" x2=\"" + num(x + 24) + "\" y2=\"" + num(y - 3) +
         "\" stroke=\"" + color + "\" stroke-width=\"2\"" +
         (dash.empty() ? std::string() : " stroke-dasharray=\"" + dash + "\"") + "/>\n";
  }
  s += "<text x=\"" + num(x + 30) + "\" y=\"" + num(y + 1) +
       "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(label) + "</text>\n";
  return s;
}

}  // namespace

std::string dash_pattern_for_view(const std::string& view) {
  if (view == "diagonal") return "6,4";
  if (view == "top" || view == "all") return "";
  return "2,3";
}

std::string group_bar_chart_svg(std::span<const StatsTable> tables, const std::string& title) {
  double y_max = 0.0;
  for (const auto& t : tables) {
    for (std::size_t g = 0; g < kNumGroups && g < t.rows.size(); ++g) {
      const auto& row = t.rows[g];
      if (row.mean_px) y_max = std::max(y_max, *row.mean_px + row.ci95_px.value_or(0.0));
    }
  }
  y_max = nice_ceiling(y_max);

  std::string s = header(title);
  s += axes(y_max, "keypoint group", "mean d_a [px]");
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double plot_h = y0 - kTop;
  const double slot = (x1 - x0) / static_cast<double>(kNumGroups);
  const double bar_w = tables.empty() ? 0.0 : slot * 0.8 / static_cast<double>(tables.size());
  auto to_y = [&](double v) { return y0 - plot_h * v / y_max; };

  for (std::size_t g = 0; g < kNumGroups; ++g) {
    const double cx = x0 + slot * (static_cast<double>(g) + 0.5);
    s += "<text x=\"" + num(cx) + "\" y=\"" + num(y0 + 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
         escape(std::string(KeypointSchema::group_names()[g])) + "</text>\n";
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (g >= tables[i].rows.size()) continue;
      const auto& row = tables[i].rows[g];
      if (!row.mean_px) continue;
      const std::string color = kPalette[i % kPalette.size()];
      const double bx = x0 + slot * static_cast<double>(g) + slot * 0.1 + bar_w * static_cast<double>(i);
      const double top = to_y(*row.mean_px);
      s += "<rect x=\"" + num(bx) + "\" y=\"" + num(top) + "\" width=\"" + num(bar_w) + "\" height=\"" +
           num(y0 - top) + "\" fill=\"" + color + "\"/>\n";
      if (row.ci95_px) {
        const double mx = bx + bar_w / 2;
        const double lo = to_y(std::max(0.0, *row.mean_px - *row.ci95_px));
        const double hi = to_y(*row.mean_px + *row.ci95_px);
        s += "<path d=\"M" + num(mx) + " " + num(lo) + " V" + num(hi) + " M" + num(mx - 3) + " " + num(hi) +
             " H" + num(mx + 3) + " M" + num(mx - 3) + " " + num(lo) + " H" + num(mx + 3) +
             "\" stroke=\"black\" fill=\"none\"/>\n";
      }
    }
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::string label = tables[i].model + " (" + tables[i].view + ")";
    s += legend_entry(i, label, kPalette[i % kPalette.size()], "", true);
  }
  s += "</svg>\n";
  return s;
}

std::string reliability_plot_svg(std::span<const ReliabilityCurve> curves, const std::string& title) {
  double y_max = 0.0;
  for (const auto& c : curves) {
    for (const auto& p : c.points) {
      if (p.mean_px) y_max = std::max(y_max, *p.mean_px);
    }
  }
  y_max = nice_ceiling(y_max);

  std::string s = header(title);
  s += axes(y_max, "missing ratio m [%]", "mean d_a [px]");
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double plot_h = y0 - kTop;
  for (int i = 0; i <= 5; ++i) {
    const double x = x0 + (x1 - x0) * i / 5.0;
    s += "<text x=\"" + num(x) + "\" y=\"" + num(y0 + 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + num(20.0 * i) + "</text>\n";
  }

  std::vector<std::string> models;
  for (const auto& c : curves) {
    if (std::find(models.begin(), models.end(), c.model) == models.end()) models.push_back(c.model);
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    const auto mi = static_cast<std::size_t>(std::find(models.begin(), models.end(), c.model) - models.begin());
    const std::string color = kPalette[mi % kPalette.size()];
    const std::string dash = dash_pattern_for_view(c.view);
    std::string pts;
    for (const auto& p : c.points) {
      if (!p.mean_px) continue;
      if (!pts.empty()) pts += ' ';
      pts += num(x0 + (x1 - x0) * p.missing_ratio) + "," + num(y0 - plot_h * *p.mean_px / y_max);
    }
    s += "<polyline class=\"series\" data-model=\"" + escape(c.model) + "\" data-view=\"" + escape(c.view) +
         "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"" +
         (dash.empty() ? std::string() : " stroke-dasharray=\"" + dash + "\"") + " points=\"" + pts + "\"/>\n";
    s += legend_entry(i, c.model + " (" + c.view + ")", color, dash, false);
  }
  s += "</svg>\n";
  return s;
}

}  // namespace posebench
