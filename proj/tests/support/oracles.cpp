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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

namespace lowdeg::testing {
namespace {

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

double naive_distance(const PointSet& ps, std::size_t i, std::size_t j) {
  double s = 0.0;
  for (std::size_t k = 0; k < ps.dim(); ++k) {
    const double d = ps[i][k] - ps[j][k];
    s += d * d;
  }
  return std::sqrt(s);
}

double edges_weight(const PointSet& ps, const std::vector<Pair>& edges) {
  double w = 0.0;
  for (auto [u, v] : edges) w += naive_distance(ps, u, v);
  return w;
}

std::vector<Pair> kruskal_mst(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<std::tuple<double, std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      all.emplace_back(naive_distance(ps, i, j), i, j);
    }
  }
  std::sort(all.begin(), all.end());
  Dsu dsu(n);
  std::vector<Pair> out;
  for (auto [w, i, j] : all) {
    if (dsu.unite(i, j)) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_spanning_tree(std::size_t n, const std::vector<Pair>& edges) {
  if (n == 0 || edges.size() != n - 1) return false;
  Dsu dsu(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || !dsu.unite(u, v)) return false;
  }
  return true;
}

std::vector<std::size_t> degrees_of(std::size_t n,
                                    const std::vector<Pair>& edges) {
  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

SubsetResult brute_force_degree_k(const PointSet& ps, int k) {
  const std::size_t n = ps.size();
  SubsetResult r;
  if (n == 1) {
    r.spanning_trees = 1;
    r.best_weight = 0.0;
    return r;
  }
  std::vector<Pair> all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  const std::size_t m = all.size();
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
  // prev_permutation over a sorted-descending mask walks all combinations.
  do {
    std::vector<Pair> edges;
    for (std::size_t e = 0; e < m; ++e) {
      if (pick[e]) edges.push_back(all[e]);
    }
    if (!is_spanning_tree(n, edges)) continue;
    ++r.spanning_trees;
    const auto deg = degrees_of(n, edges);
    if (*std::max_element(deg.begin(), deg.end()) >
        static_cast<std::size_t>(k)) {
      continue;
    }
    const double w = edges_weight(ps, edges);
    if (!r.best_weight || w < *r.best_weight) r.best_weight = w;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return r;
}

double brute_force_path(const PointSet& ps, std::vector<std::size_t> vertices,
                        std::optional<std::size_t> anchor) {
  std::sort(vertices.begin(), vertices.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double w = 0.0;
    std::size_t prev = anchor ? *anchor : vertices.front();
    for (std::size_t i = anchor ? 0 : 1; i < vertices.size(); ++i) {
      w += naive_distance(ps, prev, vertices[i]);
      prev = vertices[i];
    }
    best = std::min(best, w);
  } while (std::next_permutation(vertices.begin(), vertices.end()));
  return best;
}

std::uint64_t canonical_hash(std::vector<Pair> edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  // FNV-1a over the sorted pairs.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (auto [u, v] : edges) {
    mix(u);
    mix(v);
  }
  return h;
}

}  // namespace lowdeg::testing
