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

// Plain-text point and tree files, SVG rendering and atomic file output.
//
// Point file: one point per line as whitespace-separated decimals; the first
// point fixes the dimension. Lines starting with '#' are comments, blank
// lines are ignored, and a "#root=<index>" comment names a designated root.
//
// Tree file: a "# n=<n> weight=<w>" header followed by n-1 lines "u v w_uv"
// with 0-based indices and lengths printed to 12 significant digits.

#ifndef LOWDEG_IO_HPP_
#define LOWDEG_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "lowdeg/geometry.hpp"
#include "lowdeg/tree.hpp"

namespace lowdeg {

struct PointFile {
  PointSet points;
  std::optional<Index> designated_root;
};

/// Throws ParseError (with the 1-based line number) on malformed input.
PointFile read_points(std::istream& in);
PointFile read_point_file(const std::filesystem::path& path);

/// Coordinates are written with 17 significant digits, so reading the
/// output back reproduces every double exactly.
void write_points(std::ostream& out, const PointSet& ps,
                  std::optional<Index> designated_root = std::nullopt);
std::string format_points(const PointSet& ps,
                          std::optional<Index> designated_root = std::nullopt);

SpanningTree read_tree(std::istream& in);
SpanningTree read_tree_file(const std::filesystem::path& path);
void write_tree(std::ostream& out, const SpanningTree& tree);
std::string format_tree(const SpanningTree& tree);

struct SvgOptions {
  double width = 640.0;
  double margin = 20.0;
  double point_radius = 3.0;
};

/// Planar drawing: points as dots, `tree` edges as solid lines and, when
/// given, `overlay` edges as dashed lines underneath. Throws InvalidInput
/// unless the points are two-dimensional.
std::string render_svg(const PointSet& ps, const SpanningTree& tree,
                       const SpanningTree* overlay = nullptr,
                       const SvgOptions& options = {});

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace lowdeg

#endif  // LOWDEG_IO_HPP_
