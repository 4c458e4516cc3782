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

#include "lowdeg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "lowdeg/error.hpp"

namespace lowdeg {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

double parse_real(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("'" + std::string(tok) + "' is not a number", line);
  }
  if (!std::isfinite(v)) {
    throw ParseError("'" + std::string(tok) + "' is not finite", line);
  }
  return v;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("'" + std::string(tok) + "' is not an index", line);
  }
  return v;
}

std::string fmt(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

PointFile read_points(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  std::vector<double> coords;
  std::optional<Index> root;
  std::size_t root_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      if (body.rfind("root=", 0) == 0) {
        root = parse_index(trim(body.substr(5)), line_no);
        root_line = line_no;
      }
      continue;
    }
    const auto toks = split_ws(line);
    if (dim == 0) {
      dim = toks.size();
    } else if (toks.size() != dim) {
      throw ParseError("expected " + std::to_string(dim) +
                           " coordinates, found " +
                           std::to_string(toks.size()),
                       line_no);
    }
    for (auto tok : toks) coords.push_back(parse_real(tok, line_no));
  }
  if (dim == 0) throw ParseError("no points found", std::max<std::size_t>(line_no, 1));
  PointSet ps(dim, std::move(coords));
  if (root && *root >= ps.size()) {
    throw ParseError("root index out of range", root_line);
  }
  return {std::move(ps), root};
}

PointFile read_point_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& ps,
                  std::optional<Index> designated_root) {
  out << format_points(ps, designated_root);
}

std::string format_points(const PointSet& ps,
                          std::optional<Index> designated_root) {
  std::string s;
  if (designated_root) {
    s += "#root=" + std::to_string(*designated_root) + "\n";
  }
  for (Index i = 0; i < ps.size(); ++i) {
    const auto p = ps[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) s += ' ';
      s += fmt(p[k], 17);
    }
    s += '\n';
  }
  return s;
}

SpanningTree read_tree(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!n) {
        for (auto tok : split_ws(line.substr(1))) {
          if (tok.rfind("n=", 0) == 0) n = parse_index(tok.substr(2), line_no);
        }
      }
      continue;
    }
    if (!n) throw ParseError("missing '# n=<n> weight=<w>' header", line_no);
    const auto toks = split_ws(line);
    if (toks.size() != 3) {
      throw ParseError("expected 'u v weight'", line_no);
    }
    const Index u = parse_index(toks[0], line_no);
    const Index v = parse_index(toks[1], line_no);
    const double w = parse_real(toks[2], line_no);
    if (u >= *n || v >= *n) throw ParseError("index out of range", line_no);
    edges.push_back({u, v, w});
  }
  if (!n) throw ParseError("missing '# n=<n> weight=<w>' header", line_no);
  return SpanningTree(*n, std::move(edges));
}

SpanningTree read_tree_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_tree(in);
}

void write_tree(std::ostream& out, const SpanningTree& tree) {
  out << format_tree(tree);
}

std::string format_tree(const SpanningTree& tree) {
  std::string s = "# n=" + std::to_string(tree.vertex_count()) +
                  " weight=" + fmt(tree.total_weight(), 12) + "\n";
  for (const Edge& e : tree.edges()) {
    s += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' +
         fmt(e.weight, 12) + '\n';
  }
  return s;
}

std::string render_svg(const PointSet& ps, const SpanningTree& tree,
                       const SpanningTree* overlay,
                       const SvgOptions& options) {
  if (ps.dim() != 2) {
    throw InvalidInput("SVG rendering needs two-dimensional points");
  }
  if (tree.vertex_count() != ps.size() ||
      (overlay && overlay->vertex_count() != ps.size())) {
    throw InvalidInput("tree and point set sizes differ");
  }
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (Index i = 0; i < ps.size(); ++i) {
    min_x = std::min(min_x, ps[i][0]);
    max_x = std::max(max_x, ps[i][0]);
    min_y = std::min(min_y, ps[i][1]);
    max_y = std::max(max_y, ps[i][1]);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double inner = options.width - 2.0 * options.margin;
  const double scale = inner / span;
  const double height = (max_y - min_y) * scale + 2.0 * options.margin;
  // SVG's y axis points down.
  auto sx = [&](Index i) {
    return fmt(options.margin + (ps[i][0] - min_x) * scale, 8);
  };
  auto sy = [&](Index i) {
    return fmt(options.margin + (max_y - ps[i][1]) * scale, 8);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << fmt(options.width, 8) << "\" height=\"" << fmt(height, 8)
      << "\" viewBox=\"0 0 " << fmt(options.width, 8) << ' '
      << fmt(height, 8) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto lines = [&](const SpanningTree& t, const char* style) {
    out << "<g " << style << ">\n";
    for (const Edge& e : t.edges()) {
      out << "<line x1=\"" << sx(e.u) << "\" y1=\"" << sy(e.u) << "\" x2=\""
          << sx(e.v) << "\" y2=\"" << sy(e.v) << "\"/>\n";
    }
    out << "</g>\n";
  };
  if (overlay) {
    lines(*overlay,
          "class=\"mst\" stroke=\"#888888\" stroke-width=\"1\" "
          "stroke-dasharray=\"4 3\" fill=\"none\"");
  }
  lines(tree, "class=\"tree\" stroke=\"#1f4e9a\" stroke-width=\"1.5\" "
              "fill=\"none\"");
  out << "<g class=\"points\" fill=\"#c0392b\">\n";
  for (Index i = 0; i < ps.size(); ++i) {
    out << "<circle cx=\"" << sx(i) << "\" cy=\"" << sy(i) << "\" r=\""
        << fmt(options.point_radius, 8) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw InvalidInput("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InvalidInput("cannot replace '" + path.string() + "'");
  }
}

}  // namespace lowdeg
