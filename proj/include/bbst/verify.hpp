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

#include <string>
#include <utility>
#include <vector>

#include "bbst/bounded_tree.hpp"

namespace bbst {

/// Evidence for one failed check: the vertices involved and what was
/// measured there. `margin` is how far the measurement is past its bound
/// (positive means violated).
struct Certificate {
  std::string clause;
  std::vector<Index> vertices;
  std::vector<std::pair<std::string, double>> measured;
  double margin = 0.0;
};

struct CheckReport {
  std::string lemma;
  long trials = 0;
  std::vector<Certificate> violations;

  bool passed() const { return violations.empty(); }
  long count(const std::string& clause) const;

  /// Concatenates another run of the same check.
  void merge(const CheckReport& other);
};

/// Angle bounds at MST vertices of degree 3, 4 and 5.
CheckReport check_angle_bounds(const Tree& t, const PointSet& ps);

/// |pv| <= 2 sin(alpha/2) max(|pu|, |uv|) for adjacent edges pu, uv.
CheckReport check_chord_bound(const Tree& t, const PointSet& ps);

/// Every 3-edge path p-u-v-q with p and q strictly on the same side of uv:
///   "alpha+gamma>=150"    alpha + gamma >= 150
///   "gamma>=120-alpha/2"  alpha <= 80 implies gamma >= 120 - alpha/2 (and
///                         symmetrically)
///   "sqrt3-two-angle"     alpha + gamma <= 210 implies
///                         |pq| <= sqrt(3) max(|pu|, |uv|, |vq|)
CheckReport check_two_angle(const Tree& t, const PointSet& ps);

/// The closed triangle spanned by two adjacent edges holds no other vertex.
CheckReport check_empty_triangle(const Tree& t, const PointSet& ps);

/// Spanning, acyclic, degree <= dbt.k and bottleneck <= dbt.factor * base,
/// recomputed from the tree alone.
CheckReport verify_result(const PointSet& ps, const DegreeBoundedTree& dbt, BottleneckValue base);

/// |pq| / max(|pu|, |uv|, |vq|) for the 3-edge path with u at the origin,
/// v on the positive x axis, convex angles alpha at u and gamma at v, and
/// p, q above the axis.
double two_angle_ratio(double alpha_degrees, double gamma_degrees, double pu, double uv, double vq);

}  // namespace bbst
