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

#include "lowdeg/degree_bounded.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "lowdeg/error.hpp"
#include "lowdeg/mst.hpp"

namespace lowdeg {
namespace {

// Pairwise distances among a handful of vertices, addressed by local slot.
class LocalMetric {
 public:
  LocalMetric(const PointSet& ps, std::span<const Index> vertices)
      : m_(vertices.size()), d_(m_ * m_, 0.0) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        d_[i * m_ + j] = d_[j * m_ + i] =
            ps.distance(vertices[i], vertices[j]);
      }
    }
  }

  double operator()(std::size_t i, std::size_t j) const {
    return d_[i * m_ + j];
  }

  double walk(std::span<const std::size_t> slots) const {
    double w = 0.0;
    for (std::size_t i = 1; i < slots.size(); ++i) {
      w += (*this)(slots[i - 1], slots[i]);
    }
    return w;
  }

 private:
  std::size_t m_;
  std::vector<double> d_;
};

// Keeps the first-seen (lexicographically smallest) candidate unless a later
// one is lighter by more than rounding noise.
bool improves(double candidate, double best) {
  return candidate < best - 1e-12 * best;
}

void check_children(Index v, std::span<const Index> children,
                    const PointSet& ps) {
  if (v >= ps.size()) throw InvalidInput("vertex out of range");
  std::vector<Index> sorted(children.begin(), children.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("children must be distinct");
  }
  for (Index c : sorted) {
    if (c == v) throw InvalidInput("a vertex cannot be its own child");
    if (c >= ps.size()) throw InvalidInput("child index out of range");
  }
}

// Cheapest ordering of `group` (global indices, ascending) walked from
// `from`. Appends the chosen order to `out` and returns its weight.
double append_best_order(Index from, std::vector<Index> group,
                         const PointSet& ps, std::vector<Index>& out) {
  if (group.empty()) return 0.0;
  std::vector<Index> nodes{from};
  nodes.insert(nodes.end(), group.begin(), group.end());
  const LocalMetric metric(ps, nodes);
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> best_order = order;
  double best = metric.walk(order);
  while (std::next_permutation(order.begin() + 1, order.end())) {
    const double w = metric.walk(order);
    if (improves(w, best)) {
      best = w;
      best_order = order;
    }
  }
  for (std::size_t i = 1; i < best_order.size(); ++i) {
    out.push_back(nodes[best_order[i]]);
  }
  return best;
}

bool planar_regime(const PointSet& ps, const RootedTree& rt) {
  return ps.dim() <= 2 && rt.max_children() <= kPlanarProvenChildren;
}

void add_path_edges(const CoveringPath& p, std::vector<IndexPair>& edges,
                    std::vector<std::size_t>& degree) {
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    edges.emplace_back(p.vertices[i - 1], p.vertices[i]);
    ++degree[p.vertices[i - 1]];
    ++degree[p.vertices[i]];
  }
}

DegreeBoundedTree assemble(const PointSet& ps, const SpanningTree& mst,
                           RootedTree rooted,
                           std::map<Index, CoveringPath> paths,
                           int degree_bound, double ratio, bool proven) {
  std::vector<IndexPair> edges;
  std::vector<std::size_t> degree(ps.size(), 0);
  for (const auto& [v, p] : paths) add_path_edges(p, edges, degree);
  SpanningTree tree = SpanningTree::from_pairs(ps, edges);
  if (max_degree(tree) > static_cast<std::size_t>(degree_bound)) {
    throw std::logic_error("replacement paths exceed the degree bound");
  }
  return DegreeBoundedTree{std::move(tree),   degree_bound, mst.total_weight(),
                           ratio,             proven,       std::move(rooted),
                           std::move(paths)};
}

RootedTree rooted_mst(const PointSet& ps, const SpanningTree& mst,
                      std::optional<Index> root) {
  if (mst.vertex_count() != ps.size()) {
    throw InvalidInput("MST does not span the point set");
  }
  return root_at_leaf(mst, root);
}

}  // namespace

double path_weight(const PointSet& ps, std::span<const Index> vertices) {
  double w = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    w += ps.distance(vertices[i - 1], vertices[i]);
  }
  return w;
}

CoveringPath shortest_anchored_path(Index v, std::span<const Index> children,
                                    const PointSet& ps) {
  check_children(v, children, ps);
  if (children.size() > kPermutationBudget) {
    return grouped_anchored_path(v, children, ps);
  }
  std::vector<Index> sorted(children.begin(), children.end());
  std::sort(sorted.begin(), sorted.end());
  CoveringPath path;
  path.anchored = true;
  path.vertices.push_back(v);
  path.weight = append_best_order(v, std::move(sorted), ps, path.vertices);
  return path;
}

CoveringPath shortest_covering_path(Index v, std::span<const Index> children,
                                    const PointSet& ps) {
  check_children(v, children, ps);
  if (children.size() > kPermutationBudget) {
    return grouped_anchored_path(v, children, ps);
  }
  std::vector<Index> nodes(children.begin(), children.end());
  nodes.push_back(v);
  std::sort(nodes.begin(), nodes.end());
  const LocalMetric metric(ps, nodes);

  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> best_order = order;
  double best = std::numeric_limits<double>::infinity();
  do {
    // Each undirected path is seen twice; keep the orientation front < back.
    if (order.front() > order.back()) continue;
    const double w = metric.walk(order);
    if (best == std::numeric_limits<double>::infinity() || improves(w, best)) {
      best = w;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  CoveringPath path;
  path.anchored = false;
  path.weight = best;
  for (std::size_t slot : best_order) path.vertices.push_back(nodes[slot]);
  return path;
}

CoveringPath grouped_anchored_path(Index v, std::span<const Index> children,
                                   const PointSet& ps) {
  check_children(v, children, ps);
  std::vector<std::pair<double, Index>> by_distance;
  by_distance.reserve(children.size());
  for (Index c : children) by_distance.emplace_back(ps.distance(v, c), c);
  std::sort(by_distance.begin(), by_distance.end());

  CoveringPath path;
  path.anchored = true;
  path.vertices.push_back(v);

  auto chunk = [&](std::size_t begin, std::size_t end) {
    std::vector<Index> group;
    for (std::size_t i = begin; i < end; ++i) {
      group.push_back(by_distance[i].second);
    }
    std::sort(group.begin(), group.end());
    return group;
  };

  const std::size_t k = by_distance.size();
  std::size_t next = k % 3;
  path.weight += append_best_order(v, chunk(0, next), ps, path.vertices);
  for (; next < k; next += 3) {
    const Index end = path.vertices.back();
    path.weight +=
        append_best_order(end, chunk(next, next + 3), ps, path.vertices);
  }
  return path;
}

DegreeBoundedTree build_tree3(const PointSet& ps, const SpanningTree& mst,
                              std::optional<Index> root,
                              Tree3Variant variant) {
  RootedTree rt = rooted_mst(ps, mst, root);
  std::map<Index, CoveringPath> paths;
  if (variant == Tree3Variant::kStrict) {
    for (Index v = 0; v < ps.size(); ++v) {
      if (rt.children[v].empty()) continue;
      paths.emplace(v, shortest_anchored_path(v, rt.children[v], ps));
    }
  } else {
    // Degree of each vertex in the partial tree built so far.
    std::vector<std::size_t> degree(ps.size(), 0);
    std::vector<IndexPair> unused;
    for (Index v : rt.preorder()) {
      if (rt.children[v].empty()) continue;
      CoveringPath p = degree[v] >= 2
                           ? shortest_anchored_path(v, rt.children[v], ps)
                           : shortest_covering_path(v, rt.children[v], ps);
      add_path_edges(p, unused, degree);
      paths.emplace(v, std::move(p));
    }
  }
  const bool proven = planar_regime(ps, rt);
  return assemble(ps, mst, std::move(rt), std::move(paths), 3, kTree3Ratio,
                  proven);
}

DegreeBoundedTree build_tree4(const PointSet& ps, const SpanningTree& mst,
                              std::optional<Index> root) {
  RootedTree rt = rooted_mst(ps, mst, root);
  std::map<Index, CoveringPath> paths;
  for (Index v = 0; v < ps.size(); ++v) {
    if (rt.children[v].empty()) continue;
    paths.emplace(v, shortest_covering_path(v, rt.children[v], ps));
  }
  const bool proven = planar_regime(ps, rt);
  return assemble(ps, mst, std::move(rt), std::move(paths), 4, kTree4Ratio,
                  proven);
}

DegreeBoundedTree build_tree3_highdim(const PointSet& ps,
                                      const SpanningTree& mst,
                                      std::optional<Index> root,
                                      HighDimMode mode) {
  RootedTree rt = rooted_mst(ps, mst, root);
  std::map<Index, CoveringPath> paths;
  for (Index v = 0; v < ps.size(); ++v) {
    if (rt.children[v].empty()) continue;
    paths.emplace(v, mode == HighDimMode::kPermute
                         ? shortest_anchored_path(v, rt.children[v], ps)
                         : grouped_anchored_path(v, rt.children[v], ps));
  }
  return assemble(ps, mst, std::move(rt), std::move(paths), 3, kHighDimRatio,
                  true);
}

std::vector<PathViolation> per_vertex_guarantee_check(
    const RootedTree& rt, const std::map<Index, CoveringPath>& paths,
    const PointSet& ps, double ratio) {
  std::vector<PathViolation> out;
  for (Index v = 0; v < rt.vertex_count(); ++v) {
    const auto& ch = rt.children[v];
    if (ch.empty()) continue;
    double star = 0.0;
    for (Index c : ch) star += ps.distance(v, c);
    const double bound = ratio * star;
    auto it = paths.find(v);
    if (it == paths.end()) {
      out.push_back({v, std::numeric_limits<double>::infinity(), bound});
      continue;
    }
    if (it->second.weight > bound + kTolerance * star) {
      out.push_back({v, it->second.weight, bound});
    }
  }
  return out;
}

DegreeBoundedTree lightest_over_roots(const SpanningTree& mst,
                                      const RootedConstruction& build) {
  const auto candidates = mst.vertex_count() == 1 ? std::vector<Index>{0}
                                                  : leaves(mst);
  std::optional<DegreeBoundedTree> best;
  for (Index r : candidates) {
    DegreeBoundedTree t = build(r);
    if (!best || t.tree.total_weight() < best->tree.total_weight()) {
      best = std::move(t);
    }
  }
  return std::move(*best);
}

}  // namespace lowdeg
