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

#include "lowdeg/report.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "json.hpp"
#include "lowdeg/error.hpp"
#include "lowdeg/mst.hpp"

namespace lowdeg {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethodNames{{
    {Method::kTree3Strict, "tree3_strict"},
    {Method::kTree3Preorder, "tree3_preorder"},
    {Method::kTree4, "tree4"},
    {Method::kTree3HighDimPermute, "tree3_highdim_permute"},
    {Method::kTree3HighDimGroup3, "tree3_highdim_group3"},
}};

double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

DegreeBoundedTree run_rooted(const PointSet& ps, const SpanningTree& mst,
                             Method method, std::optional<Index> root) {
  switch (method) {
    case Method::kTree3Strict:
      return build_tree3(ps, mst, root, Tree3Variant::kStrict);
    case Method::kTree3Preorder:
      return build_tree3(ps, mst, root, Tree3Variant::kPreorderRelaxed);
    case Method::kTree4:
      return build_tree4(ps, mst, root);
    case Method::kTree3HighDimPermute:
      return build_tree3_highdim(ps, mst, root, HighDimMode::kPermute);
    case Method::kTree3HighDimGroup3:
      return build_tree3_highdim(ps, mst, root, HighDimMode::kGroup3);
  }
  throw InvalidInput("unknown construction method");
}

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [method, canonical] : kMethodNames) {
    if (canonical == name) return method;
  }
  throw InvalidInput("unknown method '" + std::string(name) + "'");
}

int method_degree_bound(Method m) { return m == Method::kTree4 ? 4 : 3; }

double weight_ratio(double weight, double mst_weight) {
  if (mst_weight == 0.0) return 1.0;
  return weight / mst_weight;
}

DegreeBoundedTree run_method(const PointSet& ps, const SpanningTree& mst,
                             Method method, const RootStrategy& roots) {
  switch (roots.kind) {
    case RootStrategy::Kind::kDefault:
      return run_rooted(ps, mst, method, std::nullopt);
    case RootStrategy::Kind::kGiven:
      return run_rooted(ps, mst, method, roots.root);
    case RootStrategy::Kind::kTryAll:
      return lightest_over_roots(mst, [&](std::optional<Index> r) {
        return run_rooted(ps, mst, method, r);
      });
  }
  throw InvalidInput("unknown root strategy");
}

RatioReport evaluate_instance(const PointSet& ps,
                              std::span<const Method> methods,
                              std::optional<int> oracle_k,
                              const RootStrategy& roots,
                              std::string instance_id,
                              std::size_t oracle_cap) {
  if (oracle_k && ps.size() > oracle_cap) {
    throw ResourceLimit("oracle enumeration is capped at n <= " +
                            std::to_string(oracle_cap) + " (got n = " +
                            std::to_string(ps.size()) + ")",
                        oracle_cap);
  }
  RatioReport report;
  report.instance_id = std::move(instance_id);
  report.n = ps.size();
  report.d = ps.dim();

  const SpanningTree mst = compute_mst(ps);
  report.mst_weight = mst.total_weight();
  report.checks.angle_violations = validate_mst_angles(mst, ps).size();

  for (Method m : methods) {
    DegreeBoundedTree t = run_method(ps, mst, m, roots);
    MethodResult r;
    r.method = m;
    r.weight = t.tree.total_weight();
    r.max_degree = max_degree(t.tree);
    r.ratio_vs_mst = weight_ratio(r.weight, report.mst_weight);
    r.guarantee_ratio = t.guarantee_ratio;
    r.guarantee_proven = t.guarantee_proven;
    r.root = t.rooted.root;
    if (t.guarantee_proven) {
      report.checks.per_vertex_violations +=
          per_vertex_guarantee_check(t.rooted, t.paths, ps, t.guarantee_ratio)
              .size();
    }
    report.results.push_back(r);
  }

  if (oracle_k) {
    const OracleResult o = optimal_degree_k_tree(ps, *oracle_k, oracle_cap);
    report.oracle = OracleSummary{*oracle_k, o.best_weight,
                                  weight_ratio(o.best_weight,
                                               report.mst_weight),
                                  o.trees_enumerated};
  }
  return report;
}

std::string to_json(const RatioReport& report) {
  ordered_json j;
  j["instance_id"] = report.instance_id;
  j["n"] = report.n;
  j["d"] = report.d;
  j["mst_weight"] = round12(report.mst_weight);
  j["results"] = ordered_json::array();
  for (const MethodResult& r : report.results) {
    ordered_json e;
    e["method"] = std::string(method_name(r.method));
    e["weight"] = round12(r.weight);
    e["max_degree"] = r.max_degree;
    e["ratio_vs_mst"] = round12(r.ratio_vs_mst);
    e["guarantee_ratio"] = round12(r.guarantee_ratio);
    e["guarantee_proven"] = r.guarantee_proven;
    e["root"] = r.root;
    j["results"].push_back(std::move(e));
  }
  if (report.oracle) {
    ordered_json o;
    o["k"] = report.oracle->k;
    o["weight"] = round12(report.oracle->weight);
    o["ratio_vs_mst"] = round12(report.oracle->ratio_vs_mst);
    o["trees_enumerated"] = report.oracle->trees_enumerated;
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  j["checks"] = {
      {"angle_violations", report.checks.angle_violations},
      {"per_vertex_violations", report.checks.per_vertex_violations}};
  return j.dump(2) + "\n";
}

}  // namespace lowdeg
