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

#include "lowdeg/mst.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>

#include "lowdeg/error.hpp"

namespace lowdeg {
namespace {

struct EdgeKey {
  double weight = std::numeric_limits<double>::infinity();
  Index lo = std::numeric_limits<Index>::max();
  Index hi = std::numeric_limits<Index>::max();

  bool operator<(const EdgeKey& o) const {
    return std::tie(weight, lo, hi) < std::tie(o.weight, o.lo, o.hi);
  }
};

EdgeKey make_key(double w, Index a, Index b) {
  return {w, std::min(a, b), std::max(a, b)};
}

}  // namespace

SpanningTree compute_mst(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<bool> in_tree(n, false);
  std::vector<EdgeKey> best(n);
  std::vector<Edge> edges;
  edges.reserve(n - 1);

  in_tree[0] = true;
  for (Index j = 1; j < n; ++j) best[j] = make_key(ps.distance(0, j), 0, j);

  for (std::size_t step = 1; step < n; ++step) {
    Index next = n;
    for (Index j = 0; j < n; ++j) {
      if (!in_tree[j] && (next == n || best[j] < best[next])) next = j;
    }
    in_tree[next] = true;
    edges.push_back({best[next].lo, best[next].hi, best[next].weight});
    for (Index j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const EdgeKey k = make_key(ps.distance(next, j), next, j);
      if (k < best[j]) best[j] = k;
    }
  }
  return SpanningTree(n, std::move(edges));
}

std::vector<Index> leaves(const SpanningTree& t) {
  std::vector<Index> out;
  const auto deg = t.degrees();
  for (Index v = 0; v < deg.size(); ++v) {
    if (deg[v] == 1) out.push_back(v);
  }
  return out;
}

RootedTree root_at_leaf(const SpanningTree& t,
                        std::optional<Index> preferred_leaf) {
  const std::size_t n = t.vertex_count();
  const auto deg = t.degrees();
  Index root = 0;
  if (preferred_leaf) {
    if (*preferred_leaf >= n || (n > 1 && deg[*preferred_leaf] != 1)) {
      throw InvalidInput("vertex " + std::to_string(*preferred_leaf) +
                         " is not a leaf of the tree");
    }
    root = *preferred_leaf;
  } else if (n > 1) {
    root = leaves(t).front();
  }

  std::vector<std::vector<std::pair<double, Index>>> adj(n);
  for (const Edge& e : t.edges()) {
    adj[e.u].push_back({e.weight, e.v});
    adj[e.v].push_back({e.weight, e.u});
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  RootedTree rt;
  rt.root = root;
  rt.parent.assign(n, std::nullopt);
  rt.children.assign(n, {});
  std::vector<Index> stack{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (auto [w, c] : adj[v]) {
      if (seen[c]) continue;
      seen[c] = true;
      rt.parent[c] = v;
      rt.children[v].push_back(c);
      stack.push_back(c);
    }
  }
  return rt;
}

std::vector<AngleViolation> validate_mst_angles(const SpanningTree& t,
                                                const PointSet& ps,
                                                double tolerance) {
  constexpr double kSixty = std::numbers::pi / 3.0;
  std::vector<AngleViolation> out;
  const auto adj = t.adjacency();
  for (Index b = 0; b < adj.size(); ++b) {
    const auto& nb = adj[b];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Index a = std::min(nb[i], nb[j]);
        const Index c = std::max(nb[i], nb[j]);
        if (ps.distance(a, b) == 0.0 || ps.distance(c, b) == 0.0) continue;
        const double at_b = angle_at(ps[b], ps[a], ps[c]);
        if (at_b < kSixty - tolerance) {
          out.push_back({a, b, c, at_b,
                         AngleViolation::Kind::kBelowSixtyDegrees});
          continue;
        }
        // a == c as points leaves the other two angles undefined; at_b is 0
        // there and was reported above.
        const double at_a = angle_at(ps[a], ps[b], ps[c]);
        const double at_c = angle_at(ps[c], ps[a], ps[b]);
        if (at_b < std::max(at_a, at_c) - tolerance) {
          out.push_back({a, b, c, at_b,
                         AngleViolation::Kind::kNotLargestAngle});
        }
      }
    }
  }
  return out;
}

std::size_t max_degree(const SpanningTree& t) {
  const auto deg = t.degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

}  // namespace lowdeg
