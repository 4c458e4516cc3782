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

#include "lowdeg/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lowdeg/error.hpp"

namespace lowdeg {
namespace {

std::uint64_t cayley_count(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 2; i < n; ++i) total *= n;
  return total;
}

}  // namespace

std::vector<IndexPair> decode_pruefer(std::span<const Index> sequence,
                                      std::size_t n) {
  if (n < 2 || sequence.size() != n - 2) {
    throw InvalidInput("Pruefer sequence length must be n - 2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Index a : sequence) {
    if (a >= n) throw InvalidInput("Pruefer label out of range");
    ++degree[a];
  }
  std::vector<IndexPair> edges;
  edges.reserve(n - 1);
  for (Index a : sequence) {
    Index leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, a), std::max(leaf, a));
    --degree[leaf];
    --degree[a];
  }
  Index u = n;
  for (Index i = 0; i < n; ++i) {
    if (degree[i] == 1) {
      if (u == n) {
        u = i;
      } else {
        edges.emplace_back(u, i);
        break;
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

SpanningTreeEnumerator::SpanningTreeEnumerator(std::size_t n, std::size_t cap)
    : n_(n), total_(0) {
  if (n < 2 || n > cap) {
    throw InvalidInput("spanning tree enumeration needs 2 <= n <= " +
                       std::to_string(cap) + ", got " + std::to_string(n));
  }
  total_ = cayley_count(n);
  sequence_.assign(n - 2, 0);
}

bool SpanningTreeEnumerator::next() {
  if (produced_ == total_) return false;
  if (produced_ > 0) {
    // Odometer increment, least significant digit last.
    for (std::size_t i = sequence_.size(); i-- > 0;) {
      if (++sequence_[i] < n_) break;
      sequence_[i] = 0;
    }
  }
  ++produced_;
  decode();
  return true;
}

void SpanningTreeEnumerator::decode() {
  edges_ = decode_pruefer(sequence_, n_);
}

OracleResult optimal_degree_k_tree(const PointSet& ps, int k,
                                   std::size_t cap) {
  const std::size_t n = ps.size();
  if (k < 1) throw InvalidInput("degree bound must be >= 1");
  if (n > cap) {
    throw ResourceLimit("oracle enumeration is capped at n <= " +
                            std::to_string(cap) + " (got n = " +
                            std::to_string(n) + ")",
                        cap);
  }
  if (n == 1) return {SpanningTree(1, {}), 0.0, k, 1};
  if (k == 1 && n >= 3) {
    throw Infeasible("no spanning tree on " + std::to_string(n) +
                     " vertices has maximum degree 1");
  }

  std::vector<double> dist(n * n, 0.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      dist[i * n + j] = dist[j * n + i] = ps.distance(i, j);
    }
  }

  // Degree of label a in the decoded tree is 1 + its multiplicity in the
  // sequence, so the degree bound can be tested before decoding.
  const std::size_t max_mult = static_cast<std::size_t>(k) - 1;
  std::vector<std::size_t> mult(n, 0);
  std::vector<Index> seq(n - 2, 0);
  mult[0] = n - 2;
  const std::uint64_t total = cayley_count(n);

  double best = std::numeric_limits<double>::infinity();
  std::vector<IndexPair> best_edges;
  for (std::uint64_t iter = 0; iter < total; ++iter) {
    if (iter > 0) {
      for (std::size_t i = seq.size(); i-- > 0;) {
        --mult[seq[i]];
        if (++seq[i] < n) {
          ++mult[seq[i]];
          break;
        }
        seq[i] = 0;
        ++mult[0];
      }
    }
    if (*std::max_element(mult.begin(), mult.end()) > max_mult) continue;
    auto edges = decode_pruefer(seq, n);
    double w = 0.0;
    for (auto [a, b] : edges) w += dist[a * n + b];
    const double eps = 1e-12 * best;
    if (best_edges.empty() || w < best - eps ||
        (w <= best + eps && edges < best_edges)) {
      best = w;
      best_edges = std::move(edges);
    }
  }
  SpanningTree tree = SpanningTree::from_pairs(ps, best_edges);
  const double weight = tree.total_weight();
  return {std::move(tree), weight, k, total};
}

}  // namespace lowdeg
