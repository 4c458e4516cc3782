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

#ifndef LOWDEG_INSTANCES_HPP_
#define LOWDEG_INSTANCES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowdeg/geometry.hpp"
#include "lowdeg/tree.hpp"

namespace lowdeg {

enum class Family {
  kSquareCenter,
  kPentagonCentroid,
  kStaircaseBad,
  kRandomUniform,
  kGrid,
  kSphereShell,
};

std::string_view family_name(Family f);
/// Accepts the canonical names ("square_center", ...) plus the short
/// aliases "staircase", "random", "pentagon" and "sphere".
Family parse_family(std::string_view name);

/// Generator request. Only the fields relevant to `family` are read.
struct InstanceSpec {
  Family family = Family::kRandomUniform;
  std::size_t n = 10;
  std::size_t dim = 2;
  std::size_t levels = 1;
  std::size_t rows = 3;
  std::size_t cols = 3;
  std::uint64_t seed = 0;
  double radius = 1.0;
  double unit = 1.0;
  double jitter = 0.0;

  /// Throws InvalidInput on out-of-range parameters for `family`.
  void validate() const;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

/// JSON object with "family" plus the family's parameters.
std::string to_json_string(const InstanceSpec& spec);
InstanceSpec instance_spec_from_json(std::string_view text);

struct Instance {
  PointSet points;
  std::optional<Index> designated_root;
};

Instance generate(const InstanceSpec& spec);

/// Corners (0,0), (1,0), (1,1), (0,1) of the unit square, then its centre.
PointSet gen_square_center();

/// Regular pentagon with vertices at 90 + 72k degrees, then the centroid
/// (the origin) as index 5.
PointSet gen_pentagon_centroid(double circumradius = 1.0);

struct StaircaseInstance {
  PointSet points;
  Index designated_root = 0;
  std::vector<IndexPair> intended_mst;
};

/// Staircase family on which the strict degree-3 construction pays close to
/// 1.5 times the MST.
///
/// Layout (lengths in units of `unit`): a hub at the origin with three arms
/// of length 0.97 at 56, 117 and 178 degrees; the 117-degree arm is the
/// designated root, so the root's only child (the hub) has three children.
/// From the hub a spine of 2*levels unit steps alternates down and right.
/// Each spine vertex carries a leaf of length 0.9 pointing opposite its next
/// step, so its two children are collinear on either side of it; a final
/// leaf one step past the last spine vertex closes the chain.
///
/// Every non-tree pair is longer than the longest edge on its tree path by
/// at least 0.004*unit, so the MST is unique and equals `intended_mst`.
StaircaseInstance gen_staircase_bad(std::size_t levels, double unit = 1.0);

/// n points uniform in [0,1)^d.
PointSet gen_random_uniform(std::size_t n, std::size_t dim,
                            std::uint64_t seed);

/// rows x cols integer lattice, row-major, each coordinate perturbed
/// uniformly in [-jitter, jitter].
PointSet gen_grid(std::size_t rows, std::size_t cols, double jitter,
                  std::uint64_t seed);

/// n points uniform on the unit sphere in R^d, d >= 3.
PointSet gen_sphere_shell(std::size_t n, std::size_t dim, std::uint64_t seed);

}  // namespace lowdeg

#endif  // LOWDEG_INSTANCES_HPP_
