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

#include "bbst/constructions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace bbst {

namespace {

constexpr std::array kNames{
    std::pair{ConstructionName::SquareCenter, std::string_view{"square_center"}},
    std::pair{ConstructionName::PentagonCenter, std::string_view{"pentagon_center"}},
    std::pair{ConstructionName::TriangleCenter, std::string_view{"triangle_center"}},
    std::pair{ConstructionName::SpiderBeta2, std::string_view{"spider_beta2"}},
    std::pair{ConstructionName::HexStar, std::string_view{"hex_star"}},
    std::pair{ConstructionName::Lower19, std::string_view{"lower19"}},
    std::pair{ConstructionName::Random, std::string_view{"random"}},
};

Point direction(double degrees) {
  const double rad = to_radians(degrees);
  return {std::cos(rad), std::sin(rad)};
}

Eigen::Matrix2Xd star(int spokes, double first_degrees, double radius) {
  Eigen::Matrix2Xd m(2, spokes + 1);
  m.col(0).setZero();
  for (int i = 0; i < spokes; ++i) m.col(i + 1) = radius * direction(first_degrees + 360.0 * i / spokes);
  return m;
}

Eigen::Matrix2Xd spider(double unit) {
  Eigen::Matrix2Xd m(2, 7);
  m.col(0).setZero();
  for (int arm = 0; arm < 3; ++arm) {
    const Point d = direction(90.0 + 120.0 * arm);
    m.col(1 + 2 * arm) = unit * d;
    m.col(2 + 2 * arm) = 2.0 * unit * d;
  }
  return m;
}

// Columns: hub, then per arm a1..a6 with a1, a2 on the arm axis, a3, a4 on
// the branch turned +60 degrees from the arm direction and a5, a6 on the
// branch turned -60 degrees.
Eigen::Matrix2Xd lower19(double unit) {
  Eigen::Matrix2Xd m(2, 19);
  m.col(0).setZero();
  for (int arm = 0; arm < 3; ++arm) {
    const double bearing = 90.0 + 120.0 * arm;
    const Point d = direction(bearing);
    const Point left = direction(bearing + 60.0);
    const Point right = direction(bearing - 60.0);
    const Point a2 = 2.0 * d;
    const int base = 1 + 6 * arm;
    m.col(base + 0) = unit * d;
    m.col(base + 1) = unit * a2;
    m.col(base + 2) = unit * (a2 + left);
    m.col(base + 3) = unit * (a2 + 2.0 * left);
    m.col(base + 4) = unit * (a2 + right);
    m.col(base + 5) = unit * (a2 + 2.0 * right);
  }
  return m;
}

// 53 random mantissa bits -> [0, 1); avoids the implementation-defined
// std::uniform_real_distribution so output is identical across toolchains.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::string_view to_string(ConstructionName name) {
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return "unknown";
}

std::optional<ConstructionName> parse_construction(std::string_view name) {
  for (const auto& [n, s] : kNames) {
    if (s == name) return n;
  }
  return std::nullopt;
}

std::vector<ConstructionName> all_constructions() {
  std::vector<ConstructionName> out;
  for (const auto& [n, s] : kNames) out.push_back(n);
  return out;
}

std::map<int, double> NamedConstruction::expected() const {
  const double sqrt2 = std::numbers::sqrt2;
  switch (name) {
    case ConstructionName::SquareCenter: return {{3, sqrt2}, {5, 1.0}};
    case ConstructionName::PentagonCenter: return {{4, 2.0 * std::sin(to_radians(36.0))}, {5, 1.0}};
    case ConstructionName::TriangleCenter: return {{5, 1.0}};
    case ConstructionName::SpiderBeta2: return {{2, 2.0}, {5, 1.0}};
    case ConstructionName::Lower19: return {{2, std::sqrt(7.0)}, {5, 1.0}};
    case ConstructionName::HexStar: return {{5, 1.0}};
    case ConstructionName::Random: return {};
  }
  return {};
}

PointSet random_points(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::BadParams, "random construction needs n >= 1");
  constexpr double kMinSeparation2 = 1e-12;
  std::mt19937_64 rng(seed);
  Eigen::Matrix2Xd m(2, n);
  int filled = 0;
  while (filled < n) {
    const Point p{unit_uniform(rng), unit_uniform(rng)};
    bool ok = true;
    for (int j = 0; j < filled && ok; ++j) ok = (m.col(j) - p).squaredNorm() >= kMinSeparation2;
    if (ok) m.col(filled++) = p;
  }
  return PointSet(std::move(m));
}

PointSet generate(const NamedConstruction& c) {
  if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
    throw Error(ErrorKind::BadParams, "radius must be positive and finite");
  }
  switch (c.name) {
    case ConstructionName::SquareCenter: return PointSet(star(4, 45.0, c.radius));
    case ConstructionName::PentagonCenter: return PointSet(star(5, 90.0, c.radius));
    case ConstructionName::TriangleCenter: return PointSet(star(3, 90.0, c.radius));
    case ConstructionName::HexStar: return PointSet(star(6, 0.0, c.radius));
    case ConstructionName::SpiderBeta2: return PointSet(spider(c.radius));
    case ConstructionName::Lower19: return PointSet(lower19(c.radius));
    case ConstructionName::Random: return random_points(c.n, c.seed);
  }
  throw Error(ErrorKind::BadParams, "unknown construction");
}

}  // namespace bbst
