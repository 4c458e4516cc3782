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

#include "lowdeg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lowdeg/degree_bounded.hpp"
#include "lowdeg/error.hpp"
#include "lowdeg/instances.hpp"
#include "lowdeg/io.hpp"
#include "lowdeg/mst.hpp"
#include "lowdeg/oracle.hpp"
#include "lowdeg/report.hpp"

namespace lowdeg::cli {
namespace {

// Bad flags or parameters; mapped to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MstArgs {
  std::string points;
  std::string output;
};

struct TreeArgs {
  std::string points;
  int degree = 3;
  std::string variant;
  Index root = 0;
  bool try_all_roots = false;
  std::string highdim_mode;
  std::string output;
  std::string report;
  std::string render;
  bool overlay_mst = false;
  std::string id;
};

struct OracleArgs {
  std::string points;
  int k = 3;
  std::string output;
  std::string report;
  std::string id;
};

struct GenArgs {
  std::string family;
  std::string config;
  InstanceSpec spec;
  std::string output;
};

// Writes `content` to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& content,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

PointFile load_points(const std::string& path) {
  try {
    return read_point_file(path);
  } catch (const ParseError& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

std::string default_id(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::size_t oracle_cap_from_env() {
  const char* raw = std::getenv(kOracleCapEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
  std::size_t cap = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, cap);
  if (ec != std::errc() || ptr != end || cap < 2) {
    throw UsageError(std::string(kOracleCapEnv) +
                     " must be an integer >= 2");
  }
  return cap;
}

int cmd_mst(const MstArgs& a, std::ostream& out) {
  const PointFile pf = load_points(a.points);
  emit(a.output, format_tree(compute_mst(pf.points)), out);
  return kExitOk;
}

Method select_method(const TreeArgs& a, std::size_t dim) {
  if (a.degree == 4) {
    if (!a.variant.empty() && a.variant != "strict") {
      throw UsageError("--variant " + a.variant + " applies to --degree 3");
    }
    if (!a.highdim_mode.empty()) {
      throw UsageError("--highdim-mode applies to --degree 3");
    }
    return Method::kTree4;
  }
  if (!a.highdim_mode.empty()) {
    if (!a.variant.empty()) {
      throw UsageError("--variant and --highdim-mode are exclusive");
    }
    return a.highdim_mode == "permute" ? Method::kTree3HighDimPermute
                                       : Method::kTree3HighDimGroup3;
  }
  if (a.variant == "preorder") return Method::kTree3Preorder;
  if (a.variant.empty() && dim >= 3) return Method::kTree3HighDimPermute;
  return Method::kTree3Strict;
}

int cmd_tree(const TreeArgs& a, bool root_given, std::ostream& out) {
  if (a.overlay_mst && a.render.empty()) {
    throw UsageError("--overlay-mst needs --render");
  }
  const PointFile pf = load_points(a.points);
  const PointSet& ps = pf.points;
  if (!a.render.empty() && ps.dim() != 2) {
    throw UsageError("--render needs planar input (d = 2), got d = " +
                     std::to_string(ps.dim()));
  }
  const Method method = select_method(a, ps.dim());
  const SpanningTree mst = compute_mst(ps);

  RootStrategy roots;
  if (a.try_all_roots) {
    roots = RootStrategy::try_all();
  } else if (root_given || pf.designated_root) {
    const Index r = root_given ? a.root : *pf.designated_root;
    const auto lv = leaves(mst);
    if (r >= ps.size() ||
        (ps.size() > 1 && !std::binary_search(lv.begin(), lv.end(), r))) {
      throw UsageError("root " + std::to_string(r) +
                       " is not a leaf of the MST");
    }
    roots = RootStrategy::given(r);
  }

  const DegreeBoundedTree t = run_method(ps, mst, method, roots);
  if (!a.report.empty()) {
    const Method methods[] = {method};
    const std::string id = a.id.empty() ? default_id(a.points) : a.id;
    write_file_atomic(a.report,
                      to_json(evaluate_instance(ps, methods, std::nullopt,
                                                roots, id)));
  }
  if (!a.render.empty()) {
    write_file_atomic(a.render,
                      render_svg(ps, t.tree, a.overlay_mst ? &mst : nullptr));
  }
  emit(a.output, format_tree(t.tree), out);
  return kExitOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const std::size_t cap = oracle_cap_from_env();
  const PointFile pf = load_points(a.points);
  const PointSet& ps = pf.points;
  if (ps.size() > cap) {
    throw ResourceLimit("oracle is capped at n <= " + std::to_string(cap) +
                            " points (input has " +
                            std::to_string(ps.size()) + "); set " +
                            kOracleCapEnv + " to raise it",
                        cap);
  }
  const OracleResult r = optimal_degree_k_tree(ps, a.k, cap);
  if (!a.report.empty()) {
    const std::string id = a.id.empty() ? default_id(a.points) : a.id;
    write_file_atomic(a.report, to_json(evaluate_instance(
                                    ps, {}, a.k, {}, id, cap)));
  }
  emit(a.output, format_tree(r.best_tree), out);
  return kExitOk;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_gen(GenArgs a, const CLI::App& sub, std::ostream& out) {
  InstanceSpec spec;
  try {
    if (!a.config.empty()) spec = instance_spec_from_json(read_text(a.config));
    if (!a.family.empty()) {
      spec.family = parse_family(a.family);
    } else if (a.config.empty()) {
      throw UsageError("gen needs a family or --config");
    }
    // Flags given on the command line override the config file.
    if (sub.count("--n")) spec.n = a.spec.n;
    if (sub.count("--d")) spec.dim = a.spec.dim;
    if (sub.count("--seed")) spec.seed = a.spec.seed;
    if (sub.count("--levels")) spec.levels = a.spec.levels;
    if (sub.count("--unit")) spec.unit = a.spec.unit;
    if (sub.count("--radius")) spec.radius = a.spec.radius;
    if (sub.count("--rows")) spec.rows = a.spec.rows;
    if (sub.count("--cols")) spec.cols = a.spec.cols;
    if (sub.count("--jitter")) spec.jitter = a.spec.jitter;
    spec.validate();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  const Instance inst = generate(spec);
  emit(a.output, format_points(inst.points, inst.designated_root), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Low-degree Euclidean spanning trees", "lowdeg"};
  app.require_subcommand(1);

  MstArgs mst_args;
  auto* mst = app.add_subcommand("mst", "Write the Euclidean MST of a point file");
  mst->add_option("points", mst_args.points, "Point file")->required();
  mst->add_option("-o,--output", mst_args.output, "Tree file (default stdout)");

  TreeArgs tree_args;
  auto* tree = app.add_subcommand(
      "tree", "Build a degree-3 or degree-4 tree from the MST");
  tree->add_option("points", tree_args.points, "Point file")->required();
  tree->add_option("--degree", tree_args.degree, "Degree bound")
      ->check(CLI::IsMember({3, 4}));
  tree->add_option("--variant", tree_args.variant,
                   "Degree-3 variant (default strict; d >= 3 defaults to "
                   "the high-dimensional construction)")
      ->check(CLI::IsMember({"strict", "preorder"}));
  auto* root_opt =
      tree->add_option("--root", tree_args.root, "Root leaf index");
  auto* all_opt = tree->add_flag("--try-all-roots", tree_args.try_all_roots,
                                 "Keep the lightest tree over all leaf roots");
  root_opt->excludes(all_opt);
  tree->add_option("--highdim-mode", tree_args.highdim_mode,
                   "High-dimensional degree-3 construction")
      ->check(CLI::IsMember({"permute", "group3"}));
  tree->add_option("-o,--output", tree_args.output,
                   "Tree file (default stdout)");
  tree->add_option("--report", tree_args.report, "RatioReport JSON path");
  tree->add_option("--render", tree_args.render, "SVG path (d = 2 only)");
  tree->add_flag("--overlay-mst", tree_args.overlay_mst,
                 "Draw the MST dashed under the tree");
  tree->add_option("--id", tree_args.id, "Instance id in the report");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "Exact minimum degree-k spanning tree by enumeration");
  oracle->add_option("points", oracle_args.points, "Point file")->required();
  oracle->add_option("--k", oracle_args.k, "Degree bound")
      ->check(CLI::PositiveNumber);
  oracle->add_option("-o,--output", oracle_args.output,
                     "Tree file (default stdout)");
  oracle->add_option("--report", oracle_args.report, "RatioReport JSON path");
  oracle->add_option("--id", oracle_args.id, "Instance id in the report");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance point file");
  gen->add_option("family", gen_args.family,
                  "square_center, pentagon_centroid, staircase_bad, "
                  "random_uniform, grid or sphere_shell");
  gen->add_option("--config", gen_args.config, "JSON instance spec");
  gen->add_option("--n", gen_args.spec.n, "Point count");
  gen->add_option("--d", gen_args.spec.dim, "Dimension");
  gen->add_option("--seed", gen_args.spec.seed, "RNG seed");
  gen->add_option("--levels", gen_args.spec.levels, "Staircase levels");
  gen->add_option("--unit", gen_args.spec.unit, "Staircase step length");
  gen->add_option("--radius", gen_args.spec.radius, "Pentagon circumradius");
  gen->add_option("--rows", gen_args.spec.rows, "Grid rows");
  gen->add_option("--cols", gen_args.spec.cols, "Grid columns");
  gen->add_option("--jitter", gen_args.spec.jitter, "Grid jitter");
  gen->add_option("-o,--output", gen_args.output,
                  "Point file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*mst) return cmd_mst(mst_args, out);
    if (*tree) return cmd_tree(tree_args, root_opt->count() > 0, out);
    if (*oracle) return cmd_oracle(oracle_args, out);
    if (*gen) return cmd_gen(gen_args, *gen, out);
  } catch (const UsageError& e) {
    err << "lowdeg: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "lowdeg: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    err << "lowdeg: error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace lowdeg::cli
