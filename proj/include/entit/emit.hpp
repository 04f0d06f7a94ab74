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

#pragma once

#include <string>
#include <vector>

// Plain-text artifact emission: CSV tables and small self-contained SVG
// line plots (no external plotting dependency).
namespace entit {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Header line plus one row per entry, numbers formatted with %.12g.
std::string to_csv(const Table& table);

void write_text_file(const std::string& path, const std::string& content);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;

  bool has_hline = false;  // optional dashed horizontal threshold
  double hline = 0;
  std::string hline_label;

  std::vector<Series> inset_series;  // optional small secondary axes
  std::string inset_y_label;
};

// Renders a line plot as a standalone SVG document.
std::string render_svg(const PlotSpec& spec);

}  // namespace entit
