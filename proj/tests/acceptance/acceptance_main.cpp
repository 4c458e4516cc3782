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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// all of them pass.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lowdeg/degree_bounded.hpp"
#include "lowdeg/geometry.hpp"
#include "lowdeg/instances.hpp"
#include "lowdeg/mst.hpp"
#include "lowdeg/oracle.hpp"

namespace lowdeg {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kTol = 1e-9;

// Degree-4 optimum on the unit pentagon plus centroid, recorded from the
// first verified run. Equals (4 + 2 sin 36deg) / 5: four spokes plus one
// pentagon side, over five spokes.
constexpr double kPentagonDeg4Ratio = 1.0351141009169893;

// Strict degree-3 ratio on the staircase family, worst over all leaf roots,
// for levels 1..6 (recorded from the first verified run).
constexpr double kStaircaseWorst[6] = {
    1.3818436918410553, 1.4121646276363626, 1.427434021168813,
    1.4366308144476465, 1.44277672911805,   1.447173899816343,
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Line {
  std::string name;
  Outcome outcome;
};

// Some criteria reuse tallies from later runs, so lines are collected and
// printed in criterion order at the end.
std::map<int, Line> g_lines;

void report(int id, const std::string& name, const Outcome& o) {
  g_lines[id] = {name, o};
}

std::string fmt(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Instance size derived from the seed by a standardised engine, so the
// corpus does not depend on library-specific distributions.
std::size_t derived_n(std::uint64_t seed, std::size_t lo, std::size_t hi) {
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

struct CorpusItem {
  std::string id;
  PointSet points;
};

std::vector<CorpusItem> planar_corpus() {
  std::vector<CorpusItem> c;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    c.push_back({"planar/" + std::to_string(s),
                 gen_random_uniform(derived_n(s, 3, 500), 2, s)});
  }
  return c;
}

std::vector<CorpusItem> highdim_corpus() {
  std::vector<CorpusItem> c;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const std::size_t d = 3 + s % 3;
    c.push_back({"highdim/" + std::to_string(s),
                 gen_random_uniform(derived_n(s, 3, 200), d, 10000 + s)});
  }
  return c;
}

std::vector<CorpusItem> small_corpus() {
  std::vector<CorpusItem> c;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t d = s % 4 == 3 ? 3 : 2;
    c.push_back({"small/" + std::to_string(s),
                 gen_random_uniform(3 + s % 5, d, 20000 + s)});
  }
  return c;
}

// Shared tallies for criteria 6 and 11, filled while criteria 1-3 and 9 run.
struct SideChecks {
  std::size_t msts = 0;
  std::size_t angle_failures = 0;
  std::size_t preorder_pairs = 0;
  std::size_t preorder_failures = 0;
  std::size_t mode_pairs = 0;
  std::size_t mode_failures = 0;
};

void note_mst(SideChecks& side, const SpanningTree& mst, const PointSet& ps) {
  ++side.msts;
  if (!validate_mst_angles(mst, ps).empty()) ++side.angle_failures;
}

void note_variants(SideChecks& side, const DegreeBoundedTree& strict,
                   const DegreeBoundedTree& pre) {
  ++side.preorder_pairs;
  if (pre.tree.total_weight() > strict.tree.total_weight() + kTol * strict.tree.total_weight()) {
    ++side.preorder_failures;
  }
}

void note_modes(SideChecks& side, const DegreeBoundedTree& perm,
                const DegreeBoundedTree& grp) {
  ++side.mode_pairs;
  if (perm.tree.total_weight() > grp.tree.total_weight() + kTol * grp.tree.total_weight()) {
    ++side.mode_failures;
  }
}

bool within(double w, double ratio, double mst) {
  return w <= ratio * mst + kTol * mst;
}

// Criteria 1 and 2 share the planar corpus.
void planar_guarantees(SideChecks& side) {
  const auto t0 = Clock::now();
  const auto corpus = planar_corpus();
  std::size_t eligible = 0, bad3 = 0, bad4 = 0;
  double worst3 = 0.0, worst4 = 0.0;
  std::string first_bad;
  for (const auto& item : corpus) {
    const PointSet& ps = item.points;
    const SpanningTree mst = compute_mst(ps);
    note_mst(side, mst, ps);
    const double w = mst.total_weight();
    const auto strict = build_tree3(ps, mst, std::nullopt, Tree3Variant::kStrict);
    const auto pre =
        build_tree3(ps, mst, std::nullopt, Tree3Variant::kPreorderRelaxed);
    const auto four = build_tree4(ps, mst);
    const auto perm = build_tree3_highdim(ps, mst, std::nullopt, HighDimMode::kPermute);
    const auto grp = build_tree3_highdim(ps, mst, std::nullopt, HighDimMode::kGroup3);
    note_variants(side, strict, pre);
    note_modes(side, perm, grp);
    if (strict.rooted.max_children() > kPlanarProvenChildren) continue;
    ++eligible;
    const double r3 = strict.tree.total_weight() / w;
    const double r4 = four.tree.total_weight() / w;
    worst3 = std::max(worst3, r3);
    worst4 = std::max(worst4, r4);
    if (max_degree(strict.tree) > 3 || !within(strict.tree.total_weight(), 1.5, w)) {
      ++bad3;
      if (first_bad.empty()) first_bad = item.id;
    }
    if (max_degree(four.tree) > 4 || !within(four.tree.total_weight(), 1.25, w)) {
      ++bad4;
      if (first_bad.empty()) first_bad = item.id;
    }
  }
  const double secs = seconds_since(t0);
  Outcome c1;
  c1.pass = eligible >= 1000 && bad3 == 0 && secs < 120.0;
  c1.detail = std::to_string(eligible) + "/" + std::to_string(corpus.size()) +
              " eligible instances, " + std::to_string(bad3) +
              " violations, worst ratio " + fmt(worst3, 6) +
              " <= 1.5, corpus time " + fmt(secs, 3) + " s (< 120 s)" +
              (first_bad.empty() ? "" : ", first failure " + first_bad);
  report(1, "degree-3 planar guarantee", c1);
  Outcome c2;
  c2.pass = eligible >= 1000 && bad4 == 0;
  c2.detail = std::to_string(eligible) + " eligible instances, " +
              std::to_string(bad4) + " violations, worst ratio " +
              fmt(worst4, 6) + " <= 1.25";
  report(2, "degree-4 planar guarantee", c2);
}

void highdim_guarantee(SideChecks& side) {
  const auto corpus = highdim_corpus();
  std::size_t bad = 0;
  double worst = 0.0;
  for (const auto& item : corpus) {
    const PointSet& ps = item.points;
    const SpanningTree mst = compute_mst(ps);
    note_mst(side, mst, ps);
    const double w = mst.total_weight();
    const auto perm = build_tree3_highdim(ps, mst, std::nullopt, HighDimMode::kPermute);
    const auto grp = build_tree3_highdim(ps, mst, std::nullopt, HighDimMode::kGroup3);
    note_modes(side, perm, grp);
    note_variants(side,
                  build_tree3(ps, mst, std::nullopt, Tree3Variant::kStrict),
                  build_tree3(ps, mst, std::nullopt,
                              Tree3Variant::kPreorderRelaxed));
    for (const auto* t : {&perm, &grp}) {
      worst = std::max(worst, t->tree.total_weight() / w);
      if (max_degree(t->tree) > 3 ||
          !within(t->tree.total_weight(), kHighDimRatio, w)) {
        ++bad;
      }
    }
  }
  Outcome o;
  o.pass = corpus.size() >= 500 && bad == 0;
  o.detail = std::to_string(corpus.size()) +
             " instances in d = 3,4,5 x 2 modes, " + std::to_string(bad) +
             " violations, worst ratio " + fmt(worst, 6) + " <= 5/3";
  report(3, "high-dimension 5/3 guarantee", o);
}

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(d);
  for (double& x : v) x = u(rng);
  return v;
}

std::vector<double> random_unit(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g;
  std::vector<double> v(d);
  double n = 0.0;
  while (n < 1e-3) {
    n = 0.0;
    for (double& x : v) {
      x = g(rng);
      n += x * x;
    }
    n = std::sqrt(n);
  }
  for (double& x : v) x /= n;
  return v;
}

void lemma3_suite() {
  std::mt19937_64 rng(3);
  const std::size_t dims[] = {2, 3, 5};
  const std::size_t samples = 1000000;
  std::size_t bad = 0;
  double min_scaled = 1e300;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t d = dims[i % 3];
    const auto x = random_vec(rng, d);
    std::vector<std::vector<double>> abc{random_vec(rng, d), random_vec(rng, d),
                                         random_vec(rng, d)};
    std::sort(abc.begin(), abc.end(), [&](const auto& p, const auto& q) {
      return distance(x, p) < distance(x, q);
    });
    const double scale = distance(x, abc[2]);
    const double s = triangle_bound_slack(x, abc[0], abc[1], abc[2]);
    if (scale > 0) min_scaled = std::min(min_scaled, s / scale);
    if (s < -kTol * scale) ++bad;
  }
  // Tight case: X at the centre, A, B, C equilateral on the unit circle.
  const std::vector<double> o{0, 0};
  std::vector<std::vector<double>> tri;
  for (int k = 0; k < 3; ++k) {
    const double a = 2 * std::numbers::pi * k / 3 + 0.25;
    tri.push_back({std::cos(a), std::sin(a)});
  }
  const double tight = triangle_bound_slack(o, tri[0], tri[1], tri[2]);
  Outcome r;
  r.pass = bad == 0 && std::abs(tight) <= kTol;
  r.detail = std::to_string(samples) + " quadruples in d = 2,3,5, " +
             std::to_string(bad) + " below -1e-9*scale (min slack/scale " +
             fmt(min_scaled, 6) + "), equilateral slack " + fmt(tight, 3);
  report(4, "triangle perimeter bound", r);
}

void prop8_suite() {
  std::mt19937_64 rng(8);
  const std::size_t samples = 1000000;
  std::size_t bad = 0;
  double min_slack = 1e300;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto a = random_unit(rng, 3), b = random_unit(rng, 3),
               c = random_unit(rng, 3), d = random_unit(rng, 3);
    const double s = tetrahedron_sum_slack(a, b, c, d);
    min_slack = std::min(min_slack, s);
    if (s < -kTol) ++bad;
  }
  const double k = 1.0 / std::sqrt(3.0);
  const std::vector<double> p1{k, k, k}, p2{k, -k, -k}, p3{-k, k, -k},
      p4{-k, -k, k};
  const double tight = tetrahedron_sum_slack(p1, p2, p3, p4);
  Outcome r;
  r.pass = bad == 0 && std::abs(tight) <= kTol;
  r.detail = std::to_string(samples) + " unit-sphere quadruples in d = 3, " +
             std::to_string(bad) + " below -1e-9 (min slack " +
             fmt(min_slack, 6) + "), regular tetrahedron slack " +
             fmt(tight, 3);
  report(5, "tetrahedron pairwise-sum bound", r);
}

void square_center_regression() {
  const PointSet ps = gen_square_center();
  const SpanningTree mst = compute_mst(ps);
  const double oracle = optimal_degree_k_tree(ps, 3).best_weight / mst.total_weight();
  const double expect = (3.0 + std::numbers::sqrt2) / 4.0;
  const double built = build_tree3(ps, mst).tree.total_weight() / mst.total_weight();
  Outcome r;
  r.pass = std::abs(oracle - expect) <= kTol && built <= 1.5;
  r.detail = "oracle ratio " + fmt(oracle) + " vs (3+sqrt2)/4 = " +
             fmt(expect) + ", build_tree3 ratio " + fmt(built, 6) + " <= 1.5";
  report(7, "square + center regression", r);
}

void pentagon_regression() {
  const PointSet ps = gen_pentagon_centroid();
  const SpanningTree mst = compute_mst(ps);
  const double oracle = optimal_degree_k_tree(ps, 4).best_weight / mst.total_weight();
  const double built = build_tree4(ps, mst).tree.total_weight() / mst.total_weight();
  Outcome r;
  r.pass = oracle >= 1.02 && oracle <= 1.05 &&
           std::abs(oracle - kPentagonDeg4Ratio) <= kTol && built <= 1.25;
  r.detail = "oracle ratio " + fmt(oracle) + " in [1.02, 1.05], frozen " +
             fmt(kPentagonDeg4Ratio) + ", build_tree4 ratio " + fmt(built, 6) +
             " <= 1.25";
  report(8, "pentagon + centroid regression", r);
}

void oracle_dominance(SideChecks& side) {
  const auto t0 = Clock::now();
  const auto corpus = small_corpus();
  std::size_t checked = 0, below = 0, nonmono = 0;
  for (const auto& item : corpus) {
    const PointSet& ps = item.points;
    const std::size_t n = ps.size();
    if (n > 7) continue;
    ++checked;
    const SpanningTree mst = compute_mst(ps);
    note_mst(side, mst, ps);
    std::vector<double> best(n + 1, 0.0);
    for (std::size_t k = 2; k < n; ++k) {
      best[k] = optimal_degree_k_tree(ps, static_cast<int>(k)).best_weight;
      if (k > 2 && best[k] > best[k - 1] + kTol) ++nonmono;
    }
    // With k >= n - 1 every tree qualifies, so the optimum is the MST.
    const double opt3 = n > 3 ? best[3] : mst.total_weight();
    const double opt4 = n > 4 ? best[4] : mst.total_weight();
    for (Index root : leaves(mst)) {
      const auto strict = build_tree3(ps, mst, root, Tree3Variant::kStrict);
      const auto pre = build_tree3(ps, mst, root, Tree3Variant::kPreorderRelaxed);
      const auto perm = build_tree3_highdim(ps, mst, root, HighDimMode::kPermute);
      const auto grp = build_tree3_highdim(ps, mst, root, HighDimMode::kGroup3);
      const auto four = build_tree4(ps, mst, root);
      note_variants(side, strict, pre);
      note_modes(side, perm, grp);
      for (const auto* t : {&strict, &pre, &perm, &grp}) {
        if (t->tree.total_weight() < opt3 - kTol) ++below;
      }
      if (four.tree.total_weight() < opt4 - kTol) ++below;
    }
  }
  const double secs = seconds_since(t0);
  Outcome r;
  r.pass = checked == corpus.size() && below == 0 && nonmono == 0 && secs < 300.0;
  r.detail = std::to_string(checked) + " instances (n <= 7), " +
             std::to_string(below) + " constructions below the oracle, " +
             std::to_string(nonmono) + " non-monotone k steps, time " +
             fmt(secs, 3) + " s (< 300 s)";
  report(9, "oracle dominance", r);
}

void staircase_trend() {
  std::vector<double> worst;
  for (std::size_t L = 1; L <= 6; ++L) {
    const auto inst = gen_staircase_bad(L);
    const SpanningTree mst = compute_mst(inst.points);
    double w = 0.0;
    for (Index root : leaves(mst)) {
      w = std::max(w, build_tree3(inst.points, mst, root).tree.total_weight());
    }
    worst.push_back(w / mst.total_weight());
  }
  bool nondecreasing = true;
  bool frozen = true;
  std::string values;
  for (std::size_t i = 0; i < worst.size(); ++i) {
    if (i > 0 && worst[i] < worst[i - 1]) nondecreasing = false;
    if (std::abs(worst[i] - kStaircaseWorst[i]) > kTol) frozen = false;
    values += (i ? ", " : "") + fmt(worst[i], 10);
  }
  const double top = *std::max_element(worst.begin(), worst.end());
  Outcome r;
  r.pass = nondecreasing && worst.back() > 1.30 && top <= 1.5 && frozen;
  r.detail = "L=1..6 worst-root ratios [" + values + "], nondecreasing " +
             (nondecreasing ? "yes" : "no") + ", L=6 > 1.30, max <= 1.5, " +
             "matches frozen values " + (frozen ? "yes" : "no");
  report(10, "staircase tightness trend", r);
}

void variant_dominance(const SideChecks& side) {
  Outcome r;
  r.pass = side.preorder_failures == 0 && side.mode_failures == 0 &&
           side.preorder_pairs > 0 && side.mode_pairs > 0;
  r.detail = std::to_string(side.preorder_pairs) +
             " same-root strict/preorder pairs with " +
             std::to_string(side.preorder_failures) + " inversions; " +
             std::to_string(side.mode_pairs) +
             " permute/group3 pairs with " +
             std::to_string(side.mode_failures) + " inversions";
  report(11, "variant dominance", r);
}

void mst_angles(const SideChecks& side) {
  Outcome r;
  r.pass = side.angle_failures == 0 && side.msts > 0;
  r.detail = std::to_string(side.msts) + " MSTs from corpora 1-3 and 9, " +
             std::to_string(side.angle_failures) + " with angle violations";
  report(6, "MST angle properties", r);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void cli_determinism() {
  const fs::path fixtures = LOWDEG_FIXTURE_DIR;
  const fs::path work = fs::temp_directory_path() / "lowdeg_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string cli = LOWDEG_CLI_PATH;
  auto fx = [&](const char* name) { return (fixtures / name).string(); };
  const std::vector<std::string> commands{
      "mst " + fx("collinear3.txt"),
      "mst " + fx("random_n60_d3.txt"),
      "tree " + fx("square_center.txt") + " --degree 3 --report @/r.json --render @/r.svg --overlay-mst",
      "tree " + fx("random_n8_d2.txt") + " --degree 3 --variant preorder --try-all-roots --report @/r.json",
      "tree " + fx("staircase_l3.txt") + " --degree 3",
      "tree " + fx("pentagon_centroid.txt") + " --degree 4 --report @/r.json",
      "tree " + fx("random_n60_d3.txt") + " --highdim-mode permute --report @/r.json",
      "tree " + fx("random_n60_d3.txt") + " --highdim-mode group3",
      "oracle " + fx("square_center.txt") + " --k 3 --report @/r.json",
      "oracle " + fx("random_n8_d2.txt") + " --k 2",
      "gen random --n 50 --d 3 --seed 1",
      "gen staircase --levels 3",
      "gen grid --rows 3 --cols 4 --jitter 0.2 --seed 7",
  };
  std::size_t mismatches = 0, failures = 0;
  for (const std::string& templ : commands) {
    std::string bundle[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path dir = work / std::to_string(rep);
      fs::remove_all(dir);
      fs::create_directories(dir);
      std::string args = templ;
      for (auto pos = args.find('@'); pos != std::string::npos;
           pos = args.find('@')) {
        args.replace(pos, 1, dir.string());
      }
      const std::string cmd =
          cli + " " + args + " > " + (dir / "stdout").string() + " 2>&1";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) ++failures;
      for (const char* f : {"stdout", "r.json", "r.svg"}) {
        if (fs::exists(dir / f)) bundle[rep] += std::string(f) + "\n" + slurp(dir / f);
      }
    }
    if (bundle[0] != bundle[1]) ++mismatches;
  }
  fs::remove_all(work);
  Outcome r;
  r.pass = mismatches == 0 && failures == 0;
  r.detail = std::to_string(commands.size()) +
             " CLI commands run twice on fixture files, " +
             std::to_string(mismatches) + " byte differences, " +
             std::to_string(failures) + " nonzero exits";
  report(12, "CLI determinism", r);
}

}  // namespace
}  // namespace lowdeg

int main() {
  using namespace lowdeg;
  SideChecks side;
  planar_guarantees(side);
  highdim_guarantee(side);
  lemma3_suite();
  prop8_suite();
  oracle_dominance(side);
  mst_angles(side);
  square_center_regression();
  pentagon_regression();
  staircase_trend();
  variant_dominance(side);
  cli_determinism();
  int failures = 0;
  for (const auto& [id, line] : g_lines) {
    std::cout << (line.outcome.pass ? "PASS" : "FAIL") << "  criterion " << id
              << ": " << line.name << " -- " << line.outcome.detail << "\n";
    if (!line.outcome.pass) ++failures;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL")
            << " (" << g_lines.size() - failures << "/" << g_lines.size()
            << " pass)" << std::endl;
  return failures == 0 ? 0 : 1;
}
