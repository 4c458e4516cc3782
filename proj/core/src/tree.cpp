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

#include "lowdeg/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "lowdeg/error.hpp"

namespace lowdeg {
namespace {

Index find_root(std::vector<Index>& parent, Index x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SpanningTree::SpanningTree(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw InvalidInput("a spanning tree needs at least one vertex");
  if (edges_.size() != n_ - 1) {
    throw InvalidInput("a spanning tree on " + std::to_string(n_) +
                       " vertices needs " + std::to_string(n_ - 1) +
                       " edges, got " + std::to_string(edges_.size()));
  }
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (e.u == e.v) throw InvalidInput("self-loop in spanning tree");
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw InvalidInput("edge weight must be finite and non-negative");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  // n-1 edges and no cycle implies connected.
  std::vector<Index> uf(n_);
  std::iota(uf.begin(), uf.end(), Index{0});
  for (const Edge& e : edges_) {
    const Index a = find_root(uf, e.u);
    const Index b = find_root(uf, e.v);
    if (a == b) throw InvalidInput("edge set contains a cycle");
    uf[a] = b;
  }
  for (const Edge& e : edges_) total_weight_ += e.weight;
}

SpanningTree SpanningTree::from_pairs(const PointSet& ps,
                                      std::span<const IndexPair> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= ps.size() || b >= ps.size()) {
      throw InvalidInput("edge endpoint out of range");
    }
    edges.push_back({a, b, ps.distance(a, b)});
  }
  return SpanningTree(ps.size(), std::move(edges));
}

std::vector<std::size_t> SpanningTree::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<Index>> SpanningTree::adjacency() const {
  std::vector<std::vector<Index>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool SpanningTree::has_edge(Index a, Index b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), std::pair{a, b},
      [](const Edge& e, const IndexPair& key) {
        return std::tie(e.u, e.v) < std::tie(key.first, key.second);
      });
  return it != edges_.end() && it->u == a && it->v == b;
}

void SpanningTree::check_against(const PointSet& ps) const {
  if (ps.size() != n_) {
    throw InvalidInput("tree has " + std::to_string(n_) +
                       " vertices but the point set has " +
                       std::to_string(ps.size()));
  }
  for (const Edge& e : edges_) {
    const double d = ps.distance(e.u, e.v);
    if (std::abs(d - e.weight) > 1e-12 * std::max(1.0, d)) {
      throw InvalidInput("edge (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) +
                         ") weight does not match its length");
    }
  }
}

std::size_t RootedTree::max_children() const {
  std::size_t best = 0;
  for (const auto& c : children) best = std::max(best, c.size());
  return best;
}

std::vector<Index> RootedTree::preorder() const {
  std::vector<Index> order;
  order.reserve(vertex_count());
  std::vector<Index> stack{root};
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& ch = children[v];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

}  // namespace lowdeg
