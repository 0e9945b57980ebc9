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

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <vector>

#include "bbst/geom.hpp"

namespace bbst {

using Index = int;

/// Immutable list of pairwise distinct finite planar points. Column i of
/// `coords()` is point i; indices are stable identities for every tree type.
class PointSet {
 public:
  explicit PointSet(Eigen::Matrix2Xd coords);
  explicit PointSet(std::span<const Point> points);

  Index size() const { return static_cast<Index>(coords_.cols()); }
  auto operator[](Index i) const { return coords_.col(i); }
  const Eigen::Matrix2Xd& coords() const { return coords_; }

  double dist(Index a, Index b) const { return bbst::dist(coords_.col(a), coords_.col(b)); }
  double dist2(Index a, Index b) const { return bbst::dist2(coords_.col(a), coords_.col(b)); }

  bool operator==(const PointSet& other) const { return coords_ == other.coords_; }

 private:
  Eigen::Matrix2Xd coords_;
};

/// Neighbors of `center` sorted counterclockwise by polar angle in [0, 360),
/// ties broken by index.
std::vector<Index> radial_order(Index center, std::span<const Index> neighbors,
                                const PointSet& ps);

/// Neighbors of `center` sorted counterclockwise starting just after the ray
/// towards `reference`; `reference` itself is not part of the output.
std::vector<Index> radial_order_after(Index center, Index reference,
                                      std::span<const Index> neighbors, const PointSet& ps);

/// Counterclockwise gaps between consecutive entries of a radial order,
/// including the wraparound gap. Sums to 360 for two or more neighbors.
std::vector<double> radial_gaps(Index center, std::span<const Index> ordered, const PointSet& ps);

}  // namespace bbst
