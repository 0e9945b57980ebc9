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

#include <cmath>
#include <numbers>

#include "bbst/error.hpp"

namespace bbst {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Point2<double>;

/// Tolerances shared by every threshold comparison in the library.
/// Angles are in degrees; lengths are relative.
inline constexpr double kAngleEps = 1e-7;
inline constexpr double kLengthEps = 1e-9;

/// A planar angle measured in degrees.
struct Angle {
  double degrees = 0.0;

  friend constexpr auto operator<=>(const Angle&, const Angle&) = default;
};

template <typename Scalar>
constexpr Scalar to_radians(Scalar degrees) {
  return degrees * std::numbers::pi_v<Scalar> / Scalar(180);
}

template <typename Scalar>
constexpr Scalar to_degrees(Scalar radians) {
  return radians * Scalar(180) / std::numbers::pi_v<Scalar>;
}

template <typename Derived1, typename Derived2>
typename Derived1::Scalar dist2(const Eigen::MatrixBase<Derived1>& a,
                                const Eigen::MatrixBase<Derived2>& b) {
  return (a - b).squaredNorm();
}

template <typename Derived1, typename Derived2>
typename Derived1::Scalar dist(const Eigen::MatrixBase<Derived1>& a,
                               const Eigen::MatrixBase<Derived2>& b) {
  using std::sqrt;
  return sqrt(dist2(a, b));
}

/// z-component of (a - o) x (b - o); positive when o, a, b turn left.
template <typename Derived0, typename Derived1, typename Derived2>
typename Derived0::Scalar cross(const Eigen::MatrixBase<Derived0>& o,
                                const Eigen::MatrixBase<Derived1>& a,
                                const Eigen::MatrixBase<Derived2>& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

/// Polar angle of `p` about `center`, in degrees within [0, 360).
template <typename Derived1, typename Derived2>
typename Derived1::Scalar polar_angle(const Eigen::MatrixBase<Derived1>& center,
                                      const Eigen::MatrixBase<Derived2>& p) {
  using Scalar = typename Derived1::Scalar;
  using std::atan2;
  Scalar deg = to_degrees(atan2(p(1) - center(1), p(0) - center(0)));
  if (deg < Scalar(0)) deg += Scalar(360);
  if (deg >= Scalar(360)) deg -= Scalar(360);
  return deg;
}

/// Counterclockwise sweep from ray center->from to ray center->to, in (0, 360].
/// Coincident rays give 360 so that a full turn around a vertex sums exactly.
template <typename Derived0, typename Derived1, typename Derived2>
typename Derived0::Scalar ccw_gap(const Eigen::MatrixBase<Derived0>& center,
                                  const Eigen::MatrixBase<Derived1>& from,
                                  const Eigen::MatrixBase<Derived2>& to) {
  using Scalar = typename Derived0::Scalar;
  Scalar gap = polar_angle(center, to) - polar_angle(center, from);
  if (gap <= Scalar(0)) gap += Scalar(360);
  return gap;
}

/// Convex angle between rays u->a and u->b, in [0, 180].
template <typename Derived0, typename Derived1, typename Derived2>
Angle angle_at(const Eigen::MatrixBase<Derived0>& u,
               const Eigen::MatrixBase<Derived1>& a,
               const Eigen::MatrixBase<Derived2>& b) {
  using std::atan2;
  using std::abs;
  const auto da = (a - u).eval();
  const auto db = (b - u).eval();
  if (da.squaredNorm() == 0 || db.squaredNorm() == 0) {
    throw Error(ErrorKind::DegenerateAngle, "angle_at: ray endpoint coincides with apex");
  }
  // atan2(|cross|, dot) stays accurate near 0 and 180 where acos does not.
  const double c = static_cast<double>(da(0) * db(1) - da(1) * db(0));
  const double d = static_cast<double>(da.dot(db));
  return Angle{to_degrees(atan2(abs(c), d))};
}

/// Side of `p` relative to the directed line a->b, normalised so the value
/// is the sine of the angle at `a`: scale free, suitable for ε comparisons.
template <typename Derived0, typename Derived1, typename Derived2>
typename Derived0::Scalar normalized_side(const Eigen::MatrixBase<Derived0>& a,
                                          const Eigen::MatrixBase<Derived1>& b,
                                          const Eigen::MatrixBase<Derived2>& p) {
  using Scalar = typename Derived0::Scalar;
  const Scalar denom = (b - a).norm() * (p - a).norm();
  if (denom == Scalar(0)) return Scalar(0);
  return cross(a, b, p) / denom;
}

}  // namespace bbst
