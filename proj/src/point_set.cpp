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

#include "bbst/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

namespace bbst {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::NormalizationFailed: return "NormalizationFailed";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::GuaranteeViolated: return "GuaranteeViolated";
    case ErrorKind::LemmaViolated: return "LemmaViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

Eigen::Matrix2Xd to_matrix(std::span<const Point> points) {
  Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = points[i];
  return m;
}

}  // namespace

PointSet::PointSet(std::span<const Point> points) : PointSet(to_matrix(points)) {}

PointSet::PointSet(Eigen::Matrix2Xd coords) : coords_(std::move(coords)) {
  const Index n = size();
  if (n < 1) throw Error(ErrorKind::InvalidPoint, "point set must contain at least one point");
  if (!coords_.allFinite()) throw Error(ErrorKind::InvalidPoint, "point coordinates must be finite");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](Index i) { return std::make_tuple(coords_(0, i), coords_(1, i)); };
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return key(a) < key(b); });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (key(order[k - 1]) == key(order[k])) {
      throw Error(ErrorKind::DuplicatePoints, "points " + std::to_string(order[k - 1]) + " and " +
                                                  std::to_string(order[k]) + " coincide");
    }
  }
}

namespace {

void check_distinct(Index center, std::span<const Index> neighbors, const PointSet& ps) {
  for (Index v : neighbors) {
    if (v == center || ps.dist2(v, center) == 0.0) {
      throw Error(ErrorKind::DegenerateAngle, "neighbor coincides with center " + std::to_string(center));
    }
  }
}

std::vector<Index> sort_by_key(std::span<const Index> neighbors, auto&& key) {
  std::vector<Index> out(neighbors.begin(), neighbors.end());
  std::sort(out.begin(), out.end(), [&](Index a, Index b) {
    const double ka = key(a);
    const double kb = key(b);
    return ka != kb ? ka < kb : a < b;
  });
  return out;
}

}  // namespace

std::vector<Index> radial_order(Index center, std::span<const Index> neighbors, const PointSet& ps) {
  check_distinct(center, neighbors, ps);
  return sort_by_key(neighbors, [&](Index v) { return polar_angle(ps[center], ps[v]); });
}

std::vector<Index> radial_order_after(Index center, Index reference, std::span<const Index> neighbors,
                                      const PointSet& ps) {
  check_distinct(center, neighbors, ps);
  // A neighbor collinear with (and on the same ray as) the reference sorts last.
  return sort_by_key(neighbors, [&](Index v) { return ccw_gap(ps[center], ps[reference], ps[v]); });
}

std::vector<double> radial_gaps(Index center, std::span<const Index> ordered, const PointSet& ps) {
  std::vector<double> gaps;
  const std::size_t d = ordered.size();
  if (d < 2) return gaps;
  gaps.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    gaps.push_back(ccw_gap(ps[center], ps[ordered[i]], ps[ordered[(i + 1) % d]]));
  }
  return gaps;
}

}  // namespace bbst
