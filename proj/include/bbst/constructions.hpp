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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbst/point_set.hpp"

namespace bbst {

enum class ConstructionName {
  SquareCenter,
  PentagonCenter,
  TriangleCenter,
  SpiderBeta2,
  HexStar,
  Lower19,
  Random,
};

std::string_view to_string(ConstructionName name);
std::optional<ConstructionName> parse_construction(std::string_view name);
std::vector<ConstructionName> all_constructions();

/// A named point set. `radius` scales every deterministic construction
/// (circumradius, or unit edge length for the spiders); `n` and `seed` only
/// apply to Random.
struct NamedConstruction {
  ConstructionName name = ConstructionName::Random;
  double radius = 1.0;
  int n = 20;
  std::uint64_t seed = 0;

  /// Known exact degree-K ratios (degree-K bottleneck over BST bottleneck).
  std::map<int, double> expected() const;
};

/// Builds the point set. The center (or hub) of every star-like
/// construction is index 0.
///
///   square_center    center + 4 corners at 45, 135, 225, 315 degrees
///   pentagon_center  center + regular pentagon
///   triangle_center  center + equilateral triangle
///   spider_beta2     center + 3 arms of two collinear unit edges, 120 apart
///   hex_star         center + 6 points 60 degrees apart (degree-6 MST tie)
///   lower19          hub + 3 arms: two collinear unit edges, then two
///                    straight 2-edge branches at +-120 degrees to the arm
///   random           uniform in the unit square, pairs closer than 1e-6
///                    rejected
PointSet generate(const NamedConstruction& c);

/// Uniform random points; identical (n, seed) give bit-identical output.
PointSet random_points(int n, std::uint64_t seed);

}  // namespace bbst
