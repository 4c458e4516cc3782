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

#ifndef LOWDEG_MST_HPP_
#define LOWDEG_MST_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "lowdeg/geometry.hpp"
#include "lowdeg/tree.hpp"

namespace lowdeg {

/// Euclidean minimum spanning tree of the complete graph on `ps`.
///
/// Dense O(n^2) vertex-growing (Prim) search, valid in any dimension. Edges
/// are totally ordered by (length, min index, max index), so the result is
/// the unique minimum under that order and does not depend on scan order.
SpanningTree compute_mst(const PointSet& ps);

/// Hangs `t` from a leaf: `preferred_leaf` when given, otherwise the
/// lowest-index vertex of degree one. Throws InvalidInput when the preferred
/// vertex is not a leaf. A single-vertex tree is rooted at 0. Children are
/// ordered by edge length, ties by index.
RootedTree root_at_leaf(const SpanningTree& t,
                        std::optional<Index> preferred_leaf = std::nullopt);

/// Vertices of degree one, ascending.
std::vector<Index> leaves(const SpanningTree& t);

struct AngleViolation {
  Index a = 0;
  Index b = 0;  // shared vertex
  Index c = 0;
  double angle = 0.0;  // radians, at b
  enum class Kind { kBelowSixtyDegrees, kNotLargestAngle } kind{};
};

/// Checks, for every pair of tree edges (b,a), (b,c) meeting at b, that the
/// angle at b is at least 60 degrees and is a largest angle of triangle abc.
/// Both hold for any Euclidean MST. Zero-length arms are skipped.
std::vector<AngleViolation> validate_mst_angles(const SpanningTree& t,
                                                const PointSet& ps,
                                                double tolerance = kTolerance);

std::size_t max_degree(const SpanningTree& t);

}  // namespace lowdeg

#endif  // LOWDEG_MST_HPP_
