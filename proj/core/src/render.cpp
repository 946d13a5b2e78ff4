// Copyright 2026 The Douglas Authors.
//
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

#include "douglas/render.hpp"

#include <algorithm>
#include <climits>
#include <iomanip>
#include <map>
#include <sstream>

namespace douglas {
namespace {

struct Bounds {
  int min_x = INT_MAX;
  int max_x = INT_MIN;  // exclusive, in lattice units
  int min_y = INT_MAX;
  int max_y = INT_MIN;
};

Bounds bounds_of(const Region& region) {
  Bounds b;
  for (const Cell& c : region.cells()) {
    b.min_x = std::min(b.min_x, c.anchor.x);
    b.max_x = std::max(b.max_x, c.anchor.x + 1);
    b.min_y = std::min(b.min_y, c.anchor.y);
    b.max_y = std::max(b.max_y, c.anchor.y + 1);
  }
  return b;
}

char letter(Color c, bool upper) {
  if (c == Color::kBlack) return upper ? 'B' : 'b';
  return upper ? 'W' : 'w';
}

}  // namespace

std::string render_ascii(const Region& region) {
  const Bounds b = bounds_of(region);
  // Two glyphs per unit square.
  std::map<Point, std::string> glyph;
  for (const Cell& c : region.cells()) {
    std::string& g = glyph[c.anchor];
    if (g.empty()) g = "  ";
    switch (c.kind) {
      case CellKind::kSquare:
        g[0] = g[1] = letter(c.color, false);
        break;
      case CellKind::kTriangleUp:
        g[0] = letter(c.color, true);
        break;
      case CellKind::kTriangleDown:
        g[1] = letter(c.color, true);
        break;
    }
  }
  std::ostringstream out;
  for (int y = b.max_y - 1; y >= b.min_y; --y) {
    std::string row;
    for (int x = b.min_x; x < b.max_x; ++x) {
      auto it = glyph.find({x, y});
      row += it == glyph.end() ? "  " : it->second;
    }
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << '\n';
  }
  return out.str();
}

std::string render_svg(const Region& region, const CellPairs& matching,
                       int unit) {
  const Bounds b = bounds_of(region);
  const int margin = unit / 2;
  const int width = (b.max_x - b.min_x) * unit + 2 * margin;
  const int height = (b.max_y - b.min_y) * unit + 2 * margin;
  // Lattice to pixels, with y flipped; sixths for centroids.
  auto px = [&](int x6) { return (x6 - 6 * b.min_x) * unit / 6.0 + margin; };
  auto py = [&](int y6) { return (6 * b.max_y - y6) * unit / 6.0 + margin; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n"
      << "<title>" << to_string(region.spec()) << "</title>\n"
      << "<g stroke=\"#808080\" stroke-width=\"1\">\n";
  for (const Cell& c : region.cells()) {
    out << "<polygon points=\"";
    bool first = true;
    for (const Point& p : outline(c)) {
      if (!first) out << ' ';
      first = false;
      out << px(6 * p.x) << ',' << py(6 * p.y);
    }
    out << "\" fill=\"" << (c.color == Color::kBlack ? "#000000" : "#ffffff")
        << "\"/>\n";
  }
  out << "</g>\n";
  if (!matching.empty()) {
    out << "<g stroke=\"#d62728\" stroke-width=\"" << std::max(2, unit / 6)
        << "\" stroke-linecap=\"round\">\n";
    for (const auto& [u, v] : matching) {
      const Point a = centroid_sixths(region.cells().at(u));
      const Point z = centroid_sixths(region.cells().at(v));
      out << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\""
          << px(z.x) << "\" y2=\"" << py(z.y) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace douglas
