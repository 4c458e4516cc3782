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

// Exhaustive ground truth for small instances: every labeled spanning tree
// on n vertices is visited exactly once by decoding all n^(n-2) Pruefer
// sequences.

#ifndef LOWDEG_ORACLE_HPP_
#define LOWDEG_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lowdeg/geometry.hpp"
#include "lowdeg/tree.hpp"

namespace lowdeg {

inline constexpr std::size_t kDefaultOracleCap = 9;

/// Streams the labeled spanning trees on n vertices, 2 <= n <= cap.
///
///   SpanningTreeEnumerator e(5);
///   while (e.next()) use(e.edges());
class SpanningTreeEnumerator {
 public:
  explicit SpanningTreeEnumerator(std::size_t n,
                                  std::size_t cap = kDefaultOracleCap);

  /// Advances to the next tree; false once all n^(n-2) have been produced.
  bool next();

  /// Edges of the current tree, each (lo, hi), sorted.
  const std::vector<IndexPair>& edges() const noexcept { return edges_; }
  const std::vector<Index>& sequence() const noexcept { return sequence_; }

  /// n^(n-2).
  std::uint64_t total() const noexcept { return total_; }

 private:
  void decode();

  std::size_t n_;
  std::uint64_t total_;
  std::uint64_t produced_ = 0;
  std::vector<Index> sequence_;
  std::vector<IndexPair> edges_;
  std::vector<std::size_t> degree_;
};

/// Decodes one Pruefer sequence over labels 0..n-1 into a sorted edge list.
std::vector<IndexPair> decode_pruefer(std::span<const Index> sequence,
                                      std::size_t n);

struct OracleResult {
  SpanningTree best_tree;
  double best_weight = 0.0;
  int degree_bound = 0;
  std::uint64_t trees_enumerated = 0;
};

/// Minimum-weight spanning tree with every degree <= k, by enumeration.
/// Ties go to the lexicographically smallest sorted edge list.
///
/// Throws ResourceLimit when ps.size() > cap, InvalidInput when k < 1, and
/// Infeasible when no tree meets the bound (k = 1 with n >= 3).
OracleResult optimal_degree_k_tree(const PointSet& ps, int k,
                                   std::size_t cap = kDefaultOracleCap);

}  // namespace lowdeg

#endif  // LOWDEG_ORACLE_HPP_
