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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>

#include "bbst/point_set.hpp"

using namespace bbst;
using Catch::Approx;

TEST_CASE("dist", "[geom]") {
  CHECK(dist(Point{0, 0}, Point{3, 4}) == 5.0);
  CHECK(dist(Point{1, 1}, Point{1, 1}) == 0.0);
  CHECK(dist(Point{0, 0}, Point{1, std::sqrt(3.0)}) == Approx(2.0).epsilon(1e-15));
}

TEST_CASE("dist templated on scalar", "[geom]") {
  const Point2<float> a{0.f, 0.f};
  const Point2<float> b{3.f, 4.f};
  STATIC_REQUIRE(std::is_same_v<decltype(dist(a, b)), float>);
  CHECK(dist(a, b) == 5.f);
  const Point2<long double> c{0.0L, 0.0L};
  const Point2<long double> d{1.0L, 1.0L};
  CHECK(dist2(c, d) == 2.0L);
}

TEST_CASE("angle_at", "[geom]") {
  const Point u{0, 0};
  CHECK(angle_at(u, Point{1, 0}, Point{0.5, std::sqrt(3.0) / 2}).degrees == Approx(60.0).margin(1e-12));
  CHECK(angle_at(u, Point{1, 0}, Point{-1, 0}).degrees == Approx(180.0).margin(1e-12));
  CHECK(angle_at(u, Point{1, 0}, Point{0, 1}).degrees == Approx(90.0).margin(1e-12));

  SECTION("degenerate rays") {
    try {
      angle_at(u, u, Point{1, 0});
      FAIL("expected DegenerateAngle");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateAngle);
    }
    CHECK_THROWS_AS(angle_at(u, Point{1, 0}, u), Error);
  }
}

TEST_CASE("radial_order", "[geom]") {
  auto at = [](double deg) {
    const double r = deg * M_PI / 180.0;
    return Point{std::cos(r), std::sin(r)};
  };

  SECTION("polar sort starts at smallest polar angle") {
    const std::vector<Point> pts{{0, 0}, at(350), at(10), at(170)};
    const PointSet ps(pts);
    const std::vector<Index> nb{1, 2, 3};
    CHECK(radial_order(0, nb, ps) == std::vector<Index>{2, 3, 1});
  }
  SECTION("single neighbor") {
    const std::vector<Point> pts{{0, 0}, at(200)};
    const PointSet ps(pts);
    const std::vector<Index> nb{1};
    CHECK(radial_order(0, nb, ps) == nb);
  }
  SECTION("square and center") {
    const std::vector<Point> pts{{0, 0}, at(315), at(135), at(45), at(225)};
    const PointSet ps(pts);
    const std::vector<Index> nb{1, 2, 3, 4};
    CHECK(radial_order(0, nb, ps) == std::vector<Index>{3, 2, 4, 1});
  }
  SECTION("collinear ties fall back to index") {
    const std::vector<Point> pts{{0, 0}, {2, 0}, {1, 0}, {0, 1}};
    const PointSet ps(pts);
    const std::vector<Index> nb{3, 2, 1};
    CHECK(radial_order(0, nb, ps) == std::vector<Index>{1, 2, 3});
  }
  SECTION("order after a reference ray") {
    const std::vector<Point> pts{{0, 0}, at(90), at(80), at(100), at(270)};
    const PointSet ps(pts);
    const std::vector<Index> nb{2, 3, 4};
    CHECK(radial_order_after(0, 1, nb, ps) == std::vector<Index>{3, 4, 2});
  }
  SECTION("coincident neighbor is rejected") {
    const std::vector<Point> pts{{0, 0}, {1, 0}};
    const PointSet ps(pts);
    const std::vector<Index> nb{0};
    CHECK_THROWS_AS(radial_order(0, nb, ps), Error);
  }
}

TEST_CASE("point set validation", "[geom]") {
  CHECK_THROWS_AS(PointSet(Eigen::Matrix2Xd(2, 0)), Error);
  Eigen::Matrix2Xd dup(2, 3);
  dup << 0, 1, 0, 0, 1, 0;
  try {
    PointSet ps(dup);
    FAIL("expected DuplicatePoints");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicatePoints);
  }
  Eigen::Matrix2Xd bad(2, 1);
  bad << std::nan(""), 0;
  CHECK_THROWS_AS(PointSet(bad), Error);
}

TEST_CASE("geometric properties on random samples", "[geom][property]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  auto sample = [&] { return Point{coord(rng), coord(rng)}; };

  for (int trial = 0; trial < 2000; ++trial) {
    const Point a = sample();
    const Point b = sample();
    const Point c = sample();
    // Triangle inequality and symmetry.
    const double ab = dist(a, b);
    const double bc = dist(b, c);
    const double ac = dist(a, c);
    REQUIRE(ac <= (ab + bc) * (1 + 1e-9));
    REQUIRE(ab == dist(b, a));
    // Convex angle is symmetric in its rays.
    REQUIRE(angle_at(a, b, c).degrees == Approx(angle_at(a, c, b).degrees).margin(1e-12));
    const double ang = angle_at(a, b, c).degrees;
    REQUIRE(ang >= 0.0);
    REQUIRE(ang <= 180.0);
  }

  for (int trial = 0; trial < 500; ++trial) {
    const int d = 2 + trial % 7;
    std::vector<Point> pts{{0, 0}};
    for (int i = 0; i < d; ++i) pts.push_back(sample());
    const PointSet ps(pts);
    std::vector<Index> nb(static_cast<std::size_t>(d));
    std::iota(nb.begin(), nb.end(), 1);
    const auto ring = radial_order(0, nb, ps);
    const auto gaps = radial_gaps(0, ring, ps);
    REQUIRE(std::accumulate(gaps.begin(), gaps.end(), 0.0) == Approx(360.0).margin(1e-7));
    for (std::size_t i = 1; i < ring.size(); ++i) {
      REQUIRE(polar_angle(ps[0], ps[ring[i - 1]]) <= polar_angle(ps[0], ps[ring[i]]));
    }
  }
}
