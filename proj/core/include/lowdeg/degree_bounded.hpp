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

// Degree-3 and degree-4 spanning trees from a rooted Euclidean MST.
//
// Every construction hangs the MST from a leaf and, for each vertex v with
// children, replaces the star v -> children(v) with a short path through
// {v} and its children. Each vertex then lies on at most two paths (its
// parent's and its own), which bounds the degree; the weight bound follows
// from a per-vertex bound on each replacement path:
//
//   anchored at v, planar, <= 4 children   w(P_v) <= 1.5  * sum |v c|
//   free endpoints, planar, <= 4 children  w(P_v) <= 1.25 * sum |v c|
//   anchored at v, any dimension           w(P_v) <= 5/3  * sum |v c|
//
// Replacement paths are exact minima over all child orderings up to
// kPermutationBudget children. Above the budget the grouped construction
// (children taken three at a time in order of distance) is used, which keeps
// the 5/3 bound in every dimension.

#ifndef LOWDEG_DEGREE_BOUNDED_HPP_
#define LOWDEG_DEGREE_BOUNDED_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lowdeg/geometry.hpp"
#include "lowdeg/tree.hpp"

namespace lowdeg {

inline constexpr std::size_t kPermutationBudget = 8;

inline constexpr double kTree3Ratio = 1.5;
inline constexpr double kTree4Ratio = 1.25;
inline constexpr double kHighDimRatio = 5.0 / 3.0;

/// Largest child count for which the planar 1.5 and 1.25 bounds are proven.
inline constexpr std::size_t kPlanarProvenChildren = 4;

/// Ordered path through a vertex and all of its children.
struct CoveringPath {
  std::vector<Index> vertices;
  double weight = 0.0;
  bool anchored = false;  // vertices.front() is the parent vertex

  friend bool operator==(const CoveringPath&, const CoveringPath&) = default;
};

double path_weight(const PointSet& ps, std::span<const Index> vertices);

/// Minimum-weight path that starts at `v` and visits every child.
/// Ties go to the lexicographically smallest child order. Child counts above
/// kPermutationBudget fall back to grouped_anchored_path().
CoveringPath shortest_anchored_path(Index v, std::span<const Index> children,
                                    const PointSet& ps);

/// Minimum-weight Hamiltonian path on {v} and the children, free endpoints.
/// The returned orientation has front() < back(); ties go to the
/// lexicographically smallest vertex sequence. Child counts above
/// kPermutationBudget fall back to grouped_anchored_path().
CoveringPath shortest_covering_path(Index v, std::span<const Index> children,
                                    const PointSet& ps);

/// Anchored path built three children at a time.
///
/// Children are sorted by distance from `v` (ties by index). The nearest
/// (count mod 3) children are covered first by the best anchored ordering;
/// every following chunk of three is appended by the cheapest of its six
/// orderings starting from the current path end. Runs in linear time in the
/// child count and satisfies the 5/3 bound in any dimension.
CoveringPath grouped_anchored_path(Index v, std::span<const Index> children,
                                   const PointSet& ps);

enum class Tree3Variant {
  kStrict,           // every path anchored at its vertex
  kPreorderRelaxed,  // free path whenever the vertex still has degree <= 1
};

enum class HighDimMode {
  kPermute,  // exact anchored minimum within budget, grouped above it
  kGroup3,   // grouped construction for every vertex
};

struct DegreeBoundedTree {
  SpanningTree tree;
  int degree_bound = 3;
  double source_mst_weight = 0.0;
  double guarantee_ratio = kTree3Ratio;
  bool guarantee_proven = false;
  RootedTree rooted;
  std::map<Index, CoveringPath> paths;  // one per vertex with children
};

/// Degree-3 tree from anchored replacement paths. The strict variant stays
/// within 1.5 * w(mst) for planar input whose rooted MST has at most four
/// children per vertex; the preorder-relaxed variant is never heavier than
/// the strict one for the same root.
DegreeBoundedTree build_tree3(const PointSet& ps, const SpanningTree& mst,
                              std::optional<Index> root = std::nullopt,
                              Tree3Variant variant = Tree3Variant::kStrict);

/// Degree-4 tree from free-endpoint replacement paths; within
/// 1.25 * w(mst) in the proven planar regime.
DegreeBoundedTree build_tree4(const PointSet& ps, const SpanningTree& mst,
                              std::optional<Index> root = std::nullopt);

/// Degree-3 tree for any dimension; always within 5/3 * w(mst).
DegreeBoundedTree build_tree3_highdim(const PointSet& ps,
                                      const SpanningTree& mst,
                                      std::optional<Index> root = std::nullopt,
                                      HighDimMode mode = HighDimMode::kPermute);

struct PathViolation {
  Index vertex = 0;
  double path_weight = 0.0;
  double bound = 0.0;  // ratio * sum of replaced edge lengths
};

/// Reports every vertex whose replacement path exceeds `ratio` times the
/// total length of the star it replaces (relative tolerance kTolerance).
/// Vertices with children but no path are reported with path_weight = +inf.
std::vector<PathViolation> per_vertex_guarantee_check(
    const RootedTree& rt, const std::map<Index, CoveringPath>& paths,
    const PointSet& ps, double ratio);

using RootedConstruction =
    std::function<DegreeBoundedTree(std::optional<Index> root)>;

/// Runs `build` from every leaf of `mst` and keeps the lightest result;
/// ties go to the lowest root index.
DegreeBoundedTree lightest_over_roots(const SpanningTree& mst,
                                      const RootedConstruction& build);

}  // namespace lowdeg

#endif  // LOWDEG_DEGREE_BOUNDED_HPP_
