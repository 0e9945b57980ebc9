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

#include "bbst/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace bbst {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string number(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

PointSet parse_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    double x = 0;
    double y = 0;
    std::string extra;
    if (!(fields >> x >> y) || (fields >> extra)) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected two numbers");
    }
    points.emplace_back(x, y);
  }
  if (points.empty()) throw Error(ErrorKind::ParseError, "no points found");
  return PointSet(points);
}

PointSet read_points(const std::string& path) {
  if (path == "-") return parse_points(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_points(in);
}

std::string format_points(const PointSet& ps) {
  std::string out;
  for (Index i = 0; i < ps.size(); ++i) {
    out += number(ps[i](0), 17) + " " + number(ps[i](1), 17) + "\n";
  }
  return out;
}

void write_points(const PointSet& ps, const std::string& path) {
  if (path == "-") {
    std::cout << format_points(ps);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << format_points(ps);
}

nlohmann::json edges_json(const Tree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : canonical(t).edges) edges.push_back({e.a, e.b});
  return edges;
}

nlohmann::json tree_report(const Tree& t, const PointSet& ps, std::optional<int> k, double base_bottleneck,
                           std::optional<double> guarantee) {
  const double b = bottleneck(t, ps).value;
  nlohmann::json j;
  j["n"] = t.n;
  j["k"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
  j["edges"] = edges_json(t);
  j["bottleneck"] = b;
  j["maxDegree"] = max_degree(t);
  j["baseBottleneck"] = base_bottleneck;
  j["ratio"] = base_bottleneck > 0 ? b / base_bottleneck : 1.0;
  j["guarantee"] = guarantee ? nlohmann::json(*guarantee) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json tree_report(const DegreeBoundedTree& dbt, const PointSet& ps) {
  return tree_report(dbt.tree, ps, dbt.k, dbt.input_bottleneck, dbt.factor);
}

nlohmann::json to_json(const ExactResult& r, const PointSet& ps) {
  return {{"k", r.k},
          {"n", ps.size()},
          {"value", r.value},
          {"edges", edges_json(r.witness)},
          {"witnessBottleneck", bottleneck(r.witness, ps).value},
          {"maxDegree", max_degree(r.witness)}};
}

nlohmann::json to_json(const RatioReport& r) {
  return {{"k", r.k}, {"exactValue", r.exact_value}, {"bstValue", r.bst_value}, {"ratio", r.ratio}};
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Certificate& c : r.violations) {
    nlohmann::json measured = nlohmann::json::object();
    for (const auto& [name, value] : c.measured) measured[name] = value;
    violations.push_back({{"clause", c.clause}, {"vertices", c.vertices}, {"measured", measured}, {"margin", c.margin}});
  }
  return {{"lemma", r.lemma}, {"trials", r.trials}, {"passed", r.passed()}, {"violations", violations}};
}

std::string render_svg(const PointSet& ps, std::span<const SvgLayer> layers) {
  const Eigen::Vector2d lo = ps.coords().rowwise().minCoeff();
  const Eigen::Vector2d hi = ps.coords().rowwise().maxCoeff();
  const double span = std::max({hi(0) - lo(0), hi(1) - lo(1), 1e-9});
  const Eigen::Vector2d extent = (hi - lo).cwiseMax(span * 1e-3);
  const Eigen::Vector2d pad = 0.05 * extent.cwiseMax(0.05 * span);
  const double min_x = lo(0) - pad(0);
  const double min_y = -(hi(1) + pad(1));  // SVG y grows downwards
  const double width = extent(0) + 2 * pad(0);
  const double height = extent(1) + 2 * pad(1);
  const double radius = 0.01 * span;

  auto x = [&](Index i) { return number(ps[i](0), 9); };
  auto y = [&](Index i) { return number(-ps[i](1), 9); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + number(min_x, 9) + " " +
                    number(min_y, 9) + " " + number(width, 9) + " " + number(height, 9) + "\">\n";
  for (const SvgLayer& layer : layers) {
    svg += "  <g class=\"" + layer.css_class + "\" stroke=\"" + layer.stroke + "\" stroke-width=\"" +
           number(layer.stroke_width * radius * 0.5, 6) + "\" fill=\"none\">\n";
    for (const Edge& e : layer.tree.edges) {
      svg += "    <line x1=\"" + x(e.a) + "\" y1=\"" + y(e.a) + "\" x2=\"" + x(e.b) + "\" y2=\"" + y(e.b) + "\"/>\n";
    }
    svg += "  </g>\n";
  }
  svg += "  <g class=\"points\" fill=\"#000\">\n";
  for (Index i = 0; i < ps.size(); ++i) {
    svg += "    <circle cx=\"" + x(i) + "\" cy=\"" + y(i) + "\" r=\"" + number(radius, 6) + "\"/>\n";
  }
  svg += "  </g>\n</svg>\n";
  return svg;
}

}  // namespace bbst
