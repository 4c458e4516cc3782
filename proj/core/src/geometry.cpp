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

#include "lowdeg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lowdeg/error.hpp"

namespace lowdeg {
namespace {

void check_coords(std::span<const double> coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw InvalidInput("point coordinates must be finite");
    }
  }
}

void check_same_dim(PointView a, PointView b) {
  if (a.size() != b.size()) {
    throw InvalidInput("dimension mismatch: " + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()));
  }
}

double norm(PointView p) {
  double s = 0.0;
  for (double c : p) s += c * c;
  return std::sqrt(s);
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidInput("point dimension must be >= 1");
  check_coords(coords_);
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw InvalidInput("point set dimension must be >= 1");
  if (coords_.empty()) throw InvalidInput("point set must be non-empty");
  if (coords_.size() % dim_ != 0) {
    throw InvalidInput("coordinate buffer is not a multiple of the dimension");
  }
  check_coords(coords_);
}

PointSet::PointSet(const std::vector<Point>& points) : dim_(0) {
  if (points.empty()) throw InvalidInput("point set must be non-empty");
  dim_ = points.front().dim();
  coords_.reserve(points.size() * dim_);
  for (const Point& p : points) {
    if (p.dim() != dim_) {
      throw InvalidInput("every point must have dimension " +
                         std::to_string(dim_));
    }
    coords_.insert(coords_.end(), p.coords().begin(), p.coords().end());
  }
}

PointSet::PointSet(std::initializer_list<std::initializer_list<double>> rows)
    : dim_(0) {
  if (rows.size() == 0) throw InvalidInput("point set must be non-empty");
  dim_ = rows.begin()->size();
  if (dim_ == 0) throw InvalidInput("point set dimension must be >= 1");
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw InvalidInput("every point must have dimension " +
                         std::to_string(dim_));
    }
    coords_.insert(coords_.end(), row.begin(), row.end());
  }
  check_coords(coords_);
}

Point PointSet::point(Index i) const {
  auto v = (*this)[i];
  return Point(std::vector<double>(v.begin(), v.end()));
}

double PointSet::distance(Index i, Index j) const {
  return lowdeg::distance((*this)[i], (*this)[j]);
}

double PointSet::diameter() const {
  double best = 0.0;
  const std::size_t n = size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) best = std::max(best, distance(i, j));
  }
  return best;
}

double distance(PointView a, PointView b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double angle_at(PointView b, PointView a, PointView c) {
  check_same_dim(a, b);
  check_same_dim(c, b);
  double dot = 0.0;
  double na = 0.0;
  double nc = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const double u = a[k] - b[k];
    const double w = c[k] - b[k];
    dot += u * w;
    na += u * u;
    nc += w * w;
  }
  if (na == 0.0 || nc == 0.0) {
    throw DegenerateAngle("angle has a zero-length arm");
  }
  const double cosine = std::clamp(dot / std::sqrt(na * nc), -1.0, 1.0);
  return std::acos(cosine);
}

double polygon_perimeter(std::span<const Point> vertices) {
  if (vertices.size() < 2) {
    throw InvalidInput("a polygon needs at least two vertices");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    total += distance(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return total;
}

double triangle_bound_slack(PointView x, PointView a, PointView b,
                            PointView c) {
  const double xa = distance(x, a);
  const double xb = distance(x, b);
  const double xc = distance(x, c);
  // Equal arms are the tight case; allow them through despite rounding.
  const double slop = 1e-12 * std::max({xa, xb, xc});
  if (xa > std::min(xb, xc) + slop) {
    throw InvalidInput(
        "triangle bound requires A to be the vertex nearest to X");
  }
  const double perimeter = distance(a, b) + distance(b, c) + distance(c, a);
  return kTriangleBoundCoefficient * xa + 2.0 * (xb + xc) - perimeter;
}

double tetrahedron_sum_slack(PointView p1, PointView p2, PointView p3,
                             PointView p4) {
  const PointView pts[] = {p1, p2, p3, p4};
  for (PointView p : pts) {
    check_same_dim(p, p1);
    if (std::abs(norm(p) - 1.0) > 1e-9) {
      throw InvalidInput("tetrahedron bound requires points on the unit sphere");
    }
  }
  if (p1.size() < 3) {
    throw InvalidInput("tetrahedron bound requires dimension >= 3");
  }
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) sum += distance(pts[i], pts[j]);
  }
  return kTetrahedronMaxPairwiseSum - sum;
}

}  // namespace lowdeg
