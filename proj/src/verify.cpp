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

#include "bbst/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace bbst {

long CheckReport::count(const std::string& clause) const {
  return std::count_if(violations.begin(), violations.end(),
                       [&](const Certificate& c) { return c.clause == clause; });
}

void CheckReport::merge(const CheckReport& other) {
  trials += other.trials;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

double rel_tol(double x) { return kLengthEps * std::max(1.0, std::abs(x)); }

}  // namespace

CheckReport check_angle_bounds(const Tree& t, const PointSet& ps) {
  CheckReport report{"angle-bounds", 0, {}};
  const Adjacency adj = adjacency(t);
  for (Index v = 0; v < t.n; ++v) {
    const int d = static_cast<int>(adj[v].size());
    if (d < 3) continue;
    ++report.trials;
    const auto ring = radial_order(v, adj[v], ps);
    const auto gaps = radial_gaps(v, ring, ps);
    auto violate = [&](std::string clause, double margin) {
      Certificate c{std::move(clause), {v}, {}, margin};
      c.vertices.insert(c.vertices.end(), ring.begin(), ring.end());
      for (std::size_t i = 0; i < gaps.size(); ++i) c.measured.emplace_back("angle" + std::to_string(i), gaps[i]);
      report.violations.push_back(std::move(c));
    };

    if (d > 5) {
      violate("degree<=5", d - 5);
      continue;
    }
    const double smallest = *std::min_element(gaps.begin(), gaps.end());
    if (d == 3) {
      if (smallest > 120.0 + kAngleEps) violate("deg3:angle<=120", smallest - 120.0);
    } else if (d == 4) {
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < 2; ++i) {
        // Excess of the pair (i, i+2) over the bounds (90, 120).
        const double lo = std::min(gaps[i], gaps[i + 2]);
        const double hi = std::max(gaps[i], gaps[i + 2]);
        best = std::min(best, std::max(lo - 90.0, hi - 120.0));
      }
      if (best > kAngleEps) violate("deg4:nonadjacent<=90,<=120", best);
    } else {
      const double largest = *std::max_element(gaps.begin(), gaps.end());
      if (largest > 120.0 + kAngleEps) violate("deg5:all<=120", largest - 120.0);
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < 5; ++i) {
        best = std::min(best, std::max(gaps[i], gaps[(i + 2) % 5]) - 90.0);
      }
      if (best > kAngleEps) violate("deg5:nonadjacent<=90", best);
    }
  }
  return report;
}

CheckReport check_chord_bound(const Tree& t, const PointSet& ps) {
  CheckReport report{"chord-bound", 0, {}};
  const Adjacency adj = adjacency(t);
  for (Index u = 0; u < t.n; ++u) {
    const auto& nb = adj[u];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Index p = nb[i];
        const Index v = nb[j];
        ++report.trials;
        const double alpha = angle_at(ps[u], ps[p], ps[v]).degrees;
        const double bound = 2.0 * std::sin(to_radians(alpha / 2.0)) * std::max(ps.dist(p, u), ps.dist(u, v));
        const double pv = ps.dist(p, v);
        if (pv > bound + rel_tol(bound)) {
          report.violations.push_back(
              {"chord", {p, u, v}, {{"alpha", alpha}, {"pv", pv}, {"bound", bound}}, pv - bound});
        }
      }
    }
  }
  return report;
}

CheckReport check_two_angle(const Tree& t, const PointSet& ps) {
  CheckReport report{"two-angle", 0, {}};
  const Adjacency adj = adjacency(t);
  const double sqrt3 = std::sqrt(3.0);
  for (const Edge& e : t.edges) {
    const Index u = e.a;
    const Index v = e.b;
    for (Index p : adj[u]) {
      if (p == v) continue;
      const double sp = normalized_side(ps[u], ps[v], ps[p]);
      for (Index q : adj[v]) {
        if (q == u) continue;
        const double sq = normalized_side(ps[u], ps[v], ps[q]);
        if (std::abs(sp) <= kLengthEps || std::abs(sq) <= kLengthEps || (sp > 0) != (sq > 0)) continue;
        ++report.trials;
        const double alpha = angle_at(ps[u], ps[p], ps[v]).degrees;
        const double gamma = angle_at(ps[v], ps[u], ps[q]).degrees;
        const std::vector<Index> path{p, u, v, q};

        if (alpha + gamma < 150.0 - kAngleEps) {
          report.violations.push_back(
              {"alpha+gamma>=150", path, {{"alpha", alpha}, {"gamma", gamma}}, 150.0 - alpha - gamma});
        }
        for (const auto& [small, other] : {std::pair{alpha, gamma}, std::pair{gamma, alpha}}) {
          if (small <= 80.0 && other < 120.0 - small / 2.0 - kAngleEps) {
            report.violations.push_back({"gamma>=120-alpha/2",
                                         path,
                                         {{"alpha", alpha}, {"gamma", gamma}},
                                         120.0 - small / 2.0 - other});
          }
        }
        if (alpha + gamma <= 210.0) {
          const double longest = std::max({ps.dist(p, u), ps.dist(u, v), ps.dist(v, q)});
          const double pq = ps.dist(p, q);
          const double bound = sqrt3 * longest;
          if (pq > bound + rel_tol(bound)) {
            report.violations.push_back({"sqrt3-two-angle",
                                         path,
                                         {{"alpha", alpha}, {"gamma", gamma}, {"pq", pq}, {"bound", bound}},
                                         pq - bound});
          }
        }
      }
    }
  }
  return report;
}

namespace {

double segment_distance(const Point& a, const Point& b, const Point& w) {
  const Point ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0 ? std::clamp((w - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (a + t * ab - w).norm();
}

// How far w lies inside the closed triangle abc (negative: outside). A flat
// triangle is treated as its longest side.
double depth_in_triangle(const Point& a, const Point& b, const Point& c, const Point& w) {
  const double scale = std::max({(a - b).norm(), (b - c).norm(), (a - c).norm()});
  const double orient = cross(a, b, c);
  if (std::abs(orient) <= kLengthEps * scale * scale) {
    const std::array<std::pair<Point, Point>, 3> sides{std::pair{a, b}, std::pair{b, c}, std::pair{a, c}};
    const auto longest = std::max_element(sides.begin(), sides.end(), [](const auto& x, const auto& y) {
      return (x.first - x.second).squaredNorm() < (y.first - y.second).squaredNorm();
    });
    return -segment_distance(longest->first, longest->second, w);
  }
  const double sign = orient > 0 ? 1.0 : -1.0;
  const std::array<Point, 3> tri{a, b, c};
  double depth = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 3; ++s) {
    const Point& x = tri[s];
    const Point& y = tri[(s + 1) % 3];
    depth = std::min(depth, sign * cross(x, y, w) / (y - x).norm());
  }
  return depth;
}

}  // namespace

CheckReport check_empty_triangle(const Tree& t, const PointSet& ps) {
  CheckReport report{"empty-triangle", 0, {}};
  const Adjacency adj = adjacency(t);
  for (Index u = 0; u < t.n; ++u) {
    const auto& nb = adj[u];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Index p = nb[i];
        const Index v = nb[j];
        ++report.trials;
        const double tol = kLengthEps * std::max({ps.dist(p, u), ps.dist(u, v), ps.dist(p, v)});
        for (Index w = 0; w < t.n; ++w) {
          if (w == p || w == u || w == v) continue;
          const double depth = depth_in_triangle(ps[p], ps[u], ps[v], ps[w]);
          if (depth >= -tol) {
            report.violations.push_back({"no-vertex-in-triangle", {p, u, v, w}, {{"depth", depth}}, depth + tol});
          }
        }
      }
    }
  }
  return report;
}

CheckReport verify_result(const PointSet& ps, const DegreeBoundedTree& dbt, BottleneckValue base) {
  CheckReport report{"verify-result", 1, {}};
  const Tree& t = dbt.tree;
  if (t.n != ps.size() || !is_spanning_tree(t)) {
    report.violations.push_back({"spanning-tree",
                                 {},
                                 {{"n", static_cast<double>(t.n)}, {"edges", static_cast<double>(t.edges.size())}},
                                 1.0});
    return report;
  }
  const auto deg = degrees(t);
  for (Index v = 0; v < t.n; ++v) {
    if (deg[v] > dbt.k) {
      report.violations.push_back({"degree", {v}, {{"degree", static_cast<double>(deg[v])}}, static_cast<double>(deg[v] - dbt.k)});
    }
  }
  const double bound = dbt.factor * base.value;
  for (const Edge& e : t.edges) {
    const double len = ps.dist(e.a, e.b);
    if (len > bound + rel_tol(bound)) {
      report.violations.push_back({"bottleneck", {e.a, e.b}, {{"length", len}, {"bound", bound}}, len - bound});
    }
  }
  return report;
}

double two_angle_ratio(double alpha_degrees, double gamma_degrees, double pu, double uv, double vq) {
  const Point u{0.0, 0.0};
  const Point v{uv, 0.0};
  const double a = to_radians(alpha_degrees);
  const double g = to_radians(180.0 - gamma_degrees);
  const Point p = u + pu * Point{std::cos(a), std::sin(a)};
  const Point q = v + vq * Point{std::cos(g), std::sin(g)};
  return dist(p, q) / std::max({pu, uv, vq});
}

}  // namespace bbst
