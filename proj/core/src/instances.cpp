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

#include "lowdeg/instances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "json.hpp"
#include "lowdeg/error.hpp"

namespace lowdeg {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::kSquareCenter, "square_center"},
    {Family::kPentagonCentroid, "pentagon_centroid"},
    {Family::kStaircaseBad, "staircase_bad"},
    {Family::kRandomUniform, "random_uniform"},
    {Family::kGrid, "grid"},
    {Family::kSphereShell, "sphere_shell"},
}};

constexpr double kHubArm = 0.97;
constexpr double kSpineLeaf = 0.9;
constexpr std::array<double, 3> kHubArmDegrees{117.0, 56.0, 178.0};

std::array<double, 2> polar(double length, double degrees) {
  const double rad = degrees * std::numbers::pi / 180.0;
  return {length * std::cos(rad), length * std::sin(rad)};
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, canonical] : kFamilyNames) {
    if (canonical == name) return family;
  }
  if (name == "staircase") return Family::kStaircaseBad;
  if (name == "random") return Family::kRandomUniform;
  if (name == "pentagon") return Family::kPentagonCentroid;
  if (name == "sphere") return Family::kSphereShell;
  throw InvalidInput("unknown instance family '" + std::string(name) + "'");
}

void InstanceSpec::validate() const {
  switch (family) {
    case Family::kSquareCenter:
      return;
    case Family::kPentagonCentroid:
      if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidInput("pentagon circumradius must be positive");
      }
      return;
    case Family::kStaircaseBad:
      if (levels < 1) throw InvalidInput("staircase needs levels >= 1");
      if (!(unit > 0.0) || !std::isfinite(unit)) {
        throw InvalidInput("staircase unit must be positive");
      }
      return;
    case Family::kRandomUniform:
      if (n < 1) throw InvalidInput("random_uniform needs n >= 1");
      if (dim < 1) throw InvalidInput("random_uniform needs d >= 1");
      return;
    case Family::kGrid:
      if (rows < 1 || cols < 1) {
        throw InvalidInput("grid needs rows >= 1 and cols >= 1");
      }
      if (!(jitter >= 0.0) || !std::isfinite(jitter)) {
        throw InvalidInput("grid jitter must be finite and non-negative");
      }
      return;
    case Family::kSphereShell:
      if (n < 1) throw InvalidInput("sphere_shell needs n >= 1");
      if (dim < 3) throw InvalidInput("sphere_shell needs d >= 3");
      return;
  }
}

std::string to_json_string(const InstanceSpec& spec) {
  json j;
  j["family"] = std::string(family_name(spec.family));
  switch (spec.family) {
    case Family::kSquareCenter:
      break;
    case Family::kPentagonCentroid:
      j["radius"] = spec.radius;
      break;
    case Family::kStaircaseBad:
      j["levels"] = spec.levels;
      j["unit"] = spec.unit;
      break;
    case Family::kRandomUniform:
    case Family::kSphereShell:
      j["n"] = spec.n;
      j["d"] = spec.dim;
      j["seed"] = spec.seed;
      break;
    case Family::kGrid:
      j["rows"] = spec.rows;
      j["cols"] = spec.cols;
      j["jitter"] = spec.jitter;
      j["seed"] = spec.seed;
      break;
  }
  return j.dump();
}

InstanceSpec instance_spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("instance spec is not valid JSON: ") +
                       e.what());
  }
  if (!j.is_object() || !j.contains("family")) {
    throw InvalidInput("instance spec needs a \"family\" field");
  }
  InstanceSpec spec;
  try {
    spec.family = parse_family(j.at("family").get<std::string>());
    spec.n = j.value("n", spec.n);
    spec.dim = j.value("d", spec.dim);
    spec.levels = j.value("levels", spec.levels);
    spec.rows = j.value("rows", spec.rows);
    spec.cols = j.value("cols", spec.cols);
    spec.seed = j.value("seed", spec.seed);
    spec.radius = j.value("radius", spec.radius);
    spec.unit = j.value("unit", spec.unit);
    spec.jitter = j.value("jitter", spec.jitter);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad instance spec field: ") + e.what());
  }
  spec.validate();
  return spec;
}

Instance generate(const InstanceSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::kSquareCenter:
      return {gen_square_center(), std::nullopt};
    case Family::kPentagonCentroid:
      return {gen_pentagon_centroid(spec.radius), std::nullopt};
    case Family::kStaircaseBad: {
      auto s = gen_staircase_bad(spec.levels, spec.unit);
      return {std::move(s.points), s.designated_root};
    }
    case Family::kRandomUniform:
      return {gen_random_uniform(spec.n, spec.dim, spec.seed), std::nullopt};
    case Family::kGrid:
      return {gen_grid(spec.rows, spec.cols, spec.jitter, spec.seed),
              std::nullopt};
    case Family::kSphereShell:
      return {gen_sphere_shell(spec.n, spec.dim, spec.seed), std::nullopt};
  }
  throw InvalidInput("unknown instance family");
}

PointSet gen_square_center() {
  return PointSet{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {0.5, 0.5}};
}

PointSet gen_pentagon_centroid(double circumradius) {
  if (!(circumradius > 0.0) || !std::isfinite(circumradius)) {
    throw InvalidInput("pentagon circumradius must be positive");
  }
  std::vector<double> coords;
  for (int k = 0; k < 5; ++k) {
    const auto p = polar(circumradius, 90.0 + 72.0 * k);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  coords.push_back(0.0);
  coords.push_back(0.0);
  return PointSet(2, std::move(coords));
}

StaircaseInstance gen_staircase_bad(std::size_t levels, double unit) {
  if (levels < 1) throw InvalidInput("staircase needs levels >= 1");
  if (!(unit > 0.0) || !std::isfinite(unit)) {
    throw InvalidInput("staircase unit must be positive");
  }
  std::vector<double> coords;
  auto add = [&](double x, double y) {
    coords.push_back(x * unit);
    coords.push_back(y * unit);
    return coords.size() / 2 - 1;
  };
  std::vector<IndexPair> edges;

  const auto root_xy = polar(kHubArm, kHubArmDegrees[0]);
  const Index root = add(root_xy[0], root_xy[1]);
  const Index hub = add(0.0, 0.0);
  edges.emplace_back(root, hub);
  for (std::size_t i = 1; i < kHubArmDegrees.size(); ++i) {
    const auto xy = polar(kHubArm, kHubArmDegrees[i]);
    edges.emplace_back(hub, add(xy[0], xy[1]));
  }

  // Spine steps alternate down, right, down, ...
  constexpr std::array<std::array<double, 2>, 2> kStep{{{0.0, -1.0},
                                                        {1.0, 0.0}}};
  double x = 0.0;
  double y = 0.0;
  Index prev = hub;
  const std::size_t spine = 2 * levels;
  for (std::size_t i = 0; i < spine; ++i) {
    x += kStep[i % 2][0];
    y += kStep[i % 2][1];
    const Index s = add(x, y);
    edges.emplace_back(prev, s);
    const auto& ahead = kStep[(i + 1) % 2];
    edges.emplace_back(s, add(x - kSpineLeaf * ahead[0],
                              y - kSpineLeaf * ahead[1]));
    prev = s;
  }
  const auto& ahead = kStep[spine % 2];
  edges.emplace_back(prev, add(x + ahead[0], y + ahead[1]));

  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  return {PointSet(2, std::move(coords)), root, std::move(edges)};
}

PointSet gen_random_uniform(std::size_t n, std::size_t dim,
                            std::uint64_t seed) {
  if (n < 1 || dim < 1) throw InvalidInput("random_uniform needs n, d >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = u(rng);
  return PointSet(dim, std::move(coords));
}

PointSet gen_grid(std::size_t rows, std::size_t cols, double jitter,
                  std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw InvalidInput("grid needs rows, cols >= 1");
  if (!(jitter >= 0.0) || !std::isfinite(jitter)) {
    throw InvalidInput("grid jitter must be finite and non-negative");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> coords;
  coords.reserve(rows * cols * 2);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double dx = u(rng);
      const double dy = u(rng);
      coords.push_back(static_cast<double>(c) + jitter * dx);
      coords.push_back(static_cast<double>(r) + jitter * dy);
    }
  }
  return PointSet(2, std::move(coords));
}

PointSet gen_sphere_shell(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("sphere_shell needs n >= 1");
  if (dim < 3) throw InvalidInput("sphere_shell needs d >= 3");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> coords;
  coords.reserve(n * dim);
  std::vector<double> v(dim);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    while (norm < 1e-12) {
      norm = 0.0;
      for (double& c : v) {
        c = g(rng);
        norm += c * c;
      }
      norm = std::sqrt(norm);
    }
    for (double c : v) coords.push_back(c / norm);
  }
  return PointSet(dim, std::move(coords));
}

}  // namespace lowdeg
