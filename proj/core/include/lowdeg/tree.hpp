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

#ifndef LOWDEG_TREE_HPP_
#define LOWDEG_TREE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lowdeg/geometry.hpp"

namespace lowdeg {

/// Undirected weighted edge, normalised so that u < v.
struct Edge {
  Index u = 0;
  Index v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using IndexPair = std::pair<Index, Index>;

/// Spanning tree over vertices 0..n-1.
///
/// Construction validates the structure (n-1 edges, in-range endpoints,
/// connected and acyclic) and throws InvalidInput otherwise. Edges are kept
/// sorted by (u, v), which fixes the summation order of total_weight().
class SpanningTree {
 public:
  SpanningTree(std::size_t n, std::vector<Edge> edges);

  /// Builds a tree from index pairs, taking each weight from the point set.
  static SpanningTree from_pairs(const PointSet& ps,
                                 std::span<const IndexPair> pairs);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  double total_weight() const noexcept { return total_weight_; }

  std::vector<std::size_t> degrees() const;
  std::vector<std::vector<Index>> adjacency() const;
  bool has_edge(Index a, Index b) const;

  /// Throws InvalidInput unless the tree spans `ps` and every stored weight
  /// matches the Euclidean length within 1e-12 relative tolerance.
  void check_against(const PointSet& ps) const;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  double total_weight_ = 0.0;
};

/// A spanning tree hung from a leaf. Children are ordered by ascending
/// distance from their parent, ties by index.
struct RootedTree {
  Index root = 0;
  std::vector<std::optional<Index>> parent;
  std::vector<std::vector<Index>> children;

  std::size_t vertex_count() const noexcept { return parent.size(); }
  std::size_t max_children() const;

  /// Vertices in depth-first preorder, children visited in stored order.
  std::vector<Index> preorder() const;
};

}  // namespace lowdeg

#endif  // LOWDEG_TREE_HPP_
