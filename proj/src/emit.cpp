// Copyright 2026 The entit Authors.
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

#include "entit/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace entit {
namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(lo < hi)) {  // degenerate or empty: open up a unit window
      const double c = (lo > hi) ? 0.0 : lo;
      lo = c - 0.5;
      hi = c + 0.5;
      return;
    }
    const double m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  }
};

// Tick step of the form {1,2,5} * 10^k giving 4-6 intervals.
double tick_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  if (frac < 1.5) return mag;
  if (frac < 3.5) return 2 * mag;
  if (frac < 7.5) return 5 * mag;
  return 10 * mag;
}

struct Axes {
  double x0, y0, w, h;  // pixel box (y grows downward; y0 is the top edge)
  Range rx, ry;
  double px(double x) const { return x0 + (x - rx.lo) / (rx.hi - rx.lo) * w; }
  double py(double y) const { return y0 + h - (y - ry.lo) / (ry.hi - ry.lo) * h; }
};

void draw_polyline(std::string& svg, const Axes& ax, const Series& s,
                   const char* color, double width) {
  svg += "  <polyline fill=\"none\" stroke=\"";
  svg += color;
  svg += "\" stroke-width=\"" + fmt("%g", width) + "\" points=\"";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    if (i) svg += ' ';
    svg += fmt("%.2f", ax.px(s.x[i])) + "," + fmt("%.2f", ax.py(s.y[i]));
  }
  svg += "\"/>\n";
}

void draw_ticks(std::string& svg, const Axes& ax, double font) {
  const double sx = tick_step(ax.rx.hi - ax.rx.lo);
  for (double t = std::ceil(ax.rx.lo / sx) * sx; t <= ax.rx.hi + 1e-12 * sx; t += sx) {
    const double X = ax.px(t);
    svg += "  <line x1=\"" + fmt("%.2f", X) + "\" y1=\"" + fmt("%.2f", ax.y0 + ax.h) +
           "\" x2=\"" + fmt("%.2f", X) + "\" y2=\"" + fmt("%.2f", ax.y0 + ax.h + 4) +
           "\" stroke=\"#333\"/>\n";
    svg += "  <text x=\"" + fmt("%.2f", X) + "\" y=\"" + fmt("%.2f", ax.y0 + ax.h + 6 + font) +
           "\" font-size=\"" + fmt("%g", font) + "\" text-anchor=\"middle\">" +
           fmt("%g", std::abs(t) < 1e-12 ? 0.0 : t) + "</text>\n";
  }
  const double sy = tick_step(ax.ry.hi - ax.ry.lo);
  for (double t = std::ceil(ax.ry.lo / sy) * sy; t <= ax.ry.hi + 1e-12 * sy; t += sy) {
    const double Y = ax.py(t);
    svg += "  <line x1=\"" + fmt("%.2f", ax.x0 - 4) + "\" y1=\"" + fmt("%.2f", Y) +
           "\" x2=\"" + fmt("%.2f", ax.x0) + "\" y2=\"" + fmt("%.2f", Y) +
           "\" stroke=\"#333\"/>\n";
    svg += "  <text x=\"" + fmt("%.2f", ax.x0 - 7) + "\" y=\"" + fmt("%.2f", Y + font * 0.35) +
           "\" font-size=\"" + fmt("%g", font) + "\" text-anchor=\"end\">" +
           fmt("%g", std::abs(t) < 1e-12 ? 0.0 : t) + "</text>\n";
  }
}

void draw_frame(std::string& svg, const Axes& ax) {
  svg += "  <rect x=\"" + fmt("%.2f", ax.x0) + "\" y=\"" + fmt("%.2f", ax.y0) +
         "\" width=\"" + fmt("%.2f", ax.w) + "\" height=\"" + fmt("%.2f", ax.h) +
         "\" fill=\"none\" stroke=\"#333\"/>\n";
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("table row width does not match the header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += fmt("%.12g", row[c]);
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string render_svg(const PlotSpec& spec) {
  const double W = 720, H = 480;
  Axes ax{70, 42, W - 70 - 24, H - 42 - 58, {}, {}};
  for (const auto& s : spec.series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      ax.rx.add(s.x[i]);
      ax.ry.add(s.y[i]);
    }
  if (spec.has_hline) ax.ry.add(spec.hline);
  ax.rx.pad();
  ax.ry.pad();

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%g", W) +
         "\" height=\"" + fmt("%g", H) + "\" viewBox=\"0 0 " + fmt("%g", W) + " " +
         fmt("%g", H) + "\" font-family=\"sans-serif\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <text x=\"" + fmt("%.2f", W / 2) +
         "\" y=\"26\" font-size=\"16\" text-anchor=\"middle\">" + spec.title + "</text>\n";

  draw_frame(svg, ax);
  draw_ticks(svg, ax, 11);
  svg += "  <text x=\"" + fmt("%.2f", ax.x0 + ax.w / 2) + "\" y=\"" + fmt("%.2f", H - 14) +
         "\" font-size=\"13\" text-anchor=\"middle\">" + spec.x_label + "</text>\n";
  svg += "  <text x=\"18\" y=\"" + fmt("%.2f", ax.y0 + ax.h / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         fmt("%.2f", ax.y0 + ax.h / 2) + ")\">" + spec.y_label + "</text>\n";

  if (spec.has_hline && spec.hline >= ax.ry.lo && spec.hline <= ax.ry.hi) {
    const double Y = ax.py(spec.hline);
    svg += "  <line x1=\"" + fmt("%.2f", ax.x0) + "\" y1=\"" + fmt("%.2f", Y) + "\" x2=\"" +
           fmt("%.2f", ax.x0 + ax.w) + "\" y2=\"" + fmt("%.2f", Y) +
           "\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
    if (!spec.hline_label.empty())
      svg += "  <text x=\"" + fmt("%.2f", ax.x0 + ax.w - 6) + "\" y=\"" + fmt("%.2f", Y - 5) +
             "\" font-size=\"11\" fill=\"#666\" text-anchor=\"end\">" + spec.hline_label +
             "</text>\n";
  }

  for (std::size_t i = 0; i < spec.series.size(); ++i)
    draw_polyline(svg, ax, spec.series[i], kPalette[i % 6], 1.8);

  // Legend, top-left corner of the plot area.
  double ly = ax.y0 + 16;
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    if (spec.series[i].label.empty()) continue;
    svg += "  <line x1=\"" + fmt("%.2f", ax.x0 + 12) + "\" y1=\"" + fmt("%.2f", ly - 4) +
           "\" x2=\"" + fmt("%.2f", ax.x0 + 34) + "\" y2=\"" + fmt("%.2f", ly - 4) +
           "\" stroke=\"" + kPalette[i % 6] + "\" stroke-width=\"1.8\"/>\n";
    svg += "  <text x=\"" + fmt("%.2f", ax.x0 + 40) + "\" y=\"" + fmt("%.2f", ly) +
           "\" font-size=\"12\">" + spec.series[i].label + "</text>\n";
    ly += 17;
  }

  if (!spec.inset_series.empty()) {
    Axes in{ax.x0 + 0.56 * ax.w, ax.y0 + 0.12 * ax.h, 0.38 * ax.w, 0.34 * ax.h, {}, {}};
    for (const auto& s : spec.inset_series)
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        in.rx.add(s.x[i]);
        in.ry.add(s.y[i]);
      }
    in.rx.pad();
    in.ry.pad();
    svg += "  <rect x=\"" + fmt("%.2f", in.x0) + "\" y=\"" + fmt("%.2f", in.y0) +
           "\" width=\"" + fmt("%.2f", in.w) + "\" height=\"" + fmt("%.2f", in.h) +
           "\" fill=\"white\" stroke=\"#999\"/>\n";
    draw_ticks(svg, in, 9);
    for (std::size_t i = 0; i < spec.inset_series.size(); ++i)
      draw_polyline(svg, in, spec.inset_series[i], kPalette[i % 6], 1.4);
    if (!spec.inset_y_label.empty())
      svg += "  <text x=\"" + fmt("%.2f", in.x0 + 6) + "\" y=\"" + fmt("%.2f", in.y0 + 14) +
             "\" font-size=\"11\" fill=\"#444\">" + spec.inset_y_label + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace entit
