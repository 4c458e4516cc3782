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

#ifndef LOWDEG_REPORT_HPP_
#define LOWDEG_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lowdeg/degree_bounded.hpp"
#include "lowdeg/geometry.hpp"
#include "lowdeg/oracle.hpp"
#include "lowdeg/tree.hpp"

namespace lowdeg {

enum class Method {
  kTree3Strict,
  kTree3Preorder,
  kTree4,
  kTree3HighDimPermute,
  kTree3HighDimGroup3,
};

std::string_view method_name(Method m);
Method parse_method(std::string_view name);
int method_degree_bound(Method m);

struct RootStrategy {
  enum class Kind { kDefault, kGiven, kTryAll };
  Kind kind = Kind::kDefault;
  Index root = 0;  // read only for kGiven

  static RootStrategy lowest_leaf() { return {}; }
  static RootStrategy given(Index r) { return {Kind::kGiven, r}; }
  static RootStrategy try_all() { return {Kind::kTryAll, 0}; }
};

/// Runs one construction on a precomputed MST. With kTryAll the lightest
/// tree over every leaf root is returned; its root is `result.rooted.root`.
DegreeBoundedTree run_method(const PointSet& ps, const SpanningTree& mst,
                             Method method, const RootStrategy& roots);

struct MethodResult {
  Method method{};
  double weight = 0.0;
  std::size_t max_degree = 0;
  double ratio_vs_mst = 1.0;
  double guarantee_ratio = 0.0;
  bool guarantee_proven = false;
  Index root = 0;
};

struct OracleSummary {
  int k = 0;
  double weight = 0.0;
  double ratio_vs_mst = 1.0;
  std::uint64_t trees_enumerated = 0;
};

struct CheckSummary {
  std::size_t angle_violations = 0;
  std::size_t per_vertex_violations = 0;
};

struct RatioReport {
  std::string instance_id;
  std::size_t n = 0;
  std::size_t d = 0;
  double mst_weight = 0.0;
  std::vector<MethodResult> results;
  std::optional<OracleSummary> oracle;
  CheckSummary checks;
};

/// Weight ratio with the convention 0/0 = 1 (all points coincident).
double weight_ratio(double weight, double mst_weight);

/// MST, every requested construction, the optional degree-k oracle and both
/// checkers for one instance. Per-vertex violations are counted only for
/// runs whose guarantee is proven. Deterministic.
RatioReport evaluate_instance(const PointSet& ps,
                              std::span<const Method> methods,
                              std::optional<int> oracle_k = std::nullopt,
                              const RootStrategy& roots = {},
                              std::string instance_id = {},
                              std::size_t oracle_cap = kDefaultOracleCap);

/// Pretty-printed JSON, fields in declaration order, reals rounded to 12
/// significant digits. Byte-identical for identical reports.
std::string to_json(const RatioReport& report);

}  // namespace lowdeg

#endif  // LOWDEG_REPORT_HPP_
