// Copyright 2026 The bbst Authors
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

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "bbst/bounded_tree.hpp"
#include "bbst/exact_oracle.hpp"
#include "bbst/verify.hpp"

namespace bbst {

// Point files: one "x y" pair per line, '#' comments and blank lines ignored.
PointSet parse_points(std::istream& in);
/// Reads a point file; "-" reads standard input.
PointSet read_points(const std::string& path);
/// 17 significant digits, so parse(format(ps)) == ps exactly.
std::string format_points(const PointSet& ps);
void write_points(const PointSet& ps, const std::string& path);

nlohmann::json edges_json(const Tree& t);

/// Keys: n, k, edges, bottleneck, maxDegree, baseBottleneck, ratio, guarantee.
/// `k` and `guarantee` are null when absent; `guarantee` is a ratio.
nlohmann::json tree_report(const Tree& t, const PointSet& ps, std::optional<int> k, double base_bottleneck,
                           std::optional<double> guarantee);
nlohmann::json tree_report(const DegreeBoundedTree& dbt, const PointSet& ps);
nlohmann::json to_json(const ExactResult& r, const PointSet& ps);
nlohmann::json to_json(const RatioReport& r);
nlohmann::json to_json(const CheckReport& r);

struct SvgLayer {
  Tree tree;
  std::string css_class;
  std::string stroke = "#333";
  double stroke_width = 1.5;
};

/// Standalone SVG: one <circle> per point, one <g> of <line> elements per
/// layer; the view box is the bounding box padded by 5%.
std::string render_svg(const PointSet& ps, std::span<const SvgLayer> layers);

}  // namespace bbst
