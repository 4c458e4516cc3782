// Copyright 2026 The lowdeg Authors
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

// Floating-point geometry shared by every other module: points, point sets,
// distances, angles, perimeters and the two standalone perimeter bounds the
// degree-bounded constructions rely on.

#ifndef LOWDEG_GEOMETRY_HPP_
#define LOWDEG_GEOMETRY_HPP_

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lowdeg {

using Index = std::size_t;
using PointView = std::span<const double>;

/// Absolute comparison tolerance, scaled by the instance diameter wherever a
/// natural length scale exists.
inline constexpr double kTolerance = 1e-9;

inline const double kTriangleBoundCoefficient = 3.0 * std::sqrt(3.0) - 4.0;
inline const double kTetrahedronMaxPairwiseSum = 4.0 * std::sqrt(6.0);

/// A point in R^d with finite coordinates, d >= 1.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  PointView coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  operator PointView() const noexcept { return coords_; }  // NOLINT

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// Dense, indexed, non-empty list of points sharing one dimension.
/// Coordinates are stored row-major in a single buffer.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<double> coords);
  explicit PointSet(const std::vector<Point>& points);
  PointSet(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const noexcept { return coords_.size() / dim_; }
  std::size_t dim() const noexcept { return dim_; }

  PointView operator[](Index i) const {
    return PointView(coords_).subspan(i * dim_, dim_);
  }
  Point point(Index i) const;
  double distance(Index i, Index j) const;

  /// Largest pairwise distance. O(n^2).
  double diameter() const;

  std::span<const double> raw() const noexcept { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

/// Euclidean norm of a - b. Throws InvalidInput on dimension mismatch.
double distance(PointView a, PointView b);

/// Angle between rays b->a and b->c, in [0, pi].
/// Throws DegenerateAngle when either arm has zero length.
double angle_at(PointView b, PointView a, PointView c);

/// Closed polygon perimeter, including the segment from the last vertex back
/// to the first. Requires at least two vertices.
double polygon_perimeter(std::span<const Point> vertices);

/// (3*sqrt(3) - 4)*|XA| + 2*(|XB| + |XC|) - P(ABC).
///
/// The right-hand side bounds the triangle perimeter whenever A is the point
/// nearest to X, so the returned slack is non-negative up to rounding. The
/// nearest-arm ordering is checked and InvalidInput is thrown when it does not
/// hold.
double triangle_bound_slack(PointView x, PointView a, PointView b,
                            PointView c);

/// 4*sqrt(6) minus the sum of the six pairwise distances of four points on the
/// unit sphere centred at the origin, d >= 3. The regular tetrahedron attains
/// the maximum, so the slack is non-negative and zero exactly there.
double tetrahedron_sum_slack(PointView p1, PointView p2, PointView p3,
                             PointView p4);

}  // namespace lowdeg

#endif  // LOWDEG_GEOMETRY_HPP_
