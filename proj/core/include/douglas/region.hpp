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

// Generalized Douglas regions on the square lattice.
//
// Lattice points are integer pairs and the southwest-to-northeast diagonals
// are the level sets of y - x. The top diagonal sits at level 0, the drawn-in
// diagonals at -d[0], -(d[0]+d[1]), ... and the bottom one at -T where T is
// the sum of d. A unit square is named by its lower-left corner (i, j); its
// own diagonal runs at level j - i, and when that level is drawn in, the
// square splits into an up triangle (upper-left half, pointing away from the
// bottom diagonal) and a down triangle (lower-right half).

#ifndef DOUGLAS_REGION_HPP_
#define DOUGLAS_REGION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "douglas/numeric.hpp"

namespace douglas {

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class CellKind : std::uint8_t { kSquare, kTriangleUp, kTriangleDown };
enum class Color : std::uint8_t { kBlack, kWhite };

constexpr Color opposite(Color c) {
  return c == Color::kBlack ? Color::kWhite : Color::kBlack;
}

struct Cell {
  CellKind kind = CellKind::kSquare;
  Color color = Color::kWhite;
  int level = 0;
  Point anchor;  // lower-left corner of the unit square holding the cell
  friend bool operator==(const Cell&, const Cell&) = default;
};

// A unit lattice segment: vertical from (x, y) to (x, y + 1), horizontal from
// (x, y) to (x + 1, y), or the diagonal from (x, y) to (x + 1, y + 1).
struct LatticeEdge {
  enum class Dir : std::uint8_t { kVertical, kHorizontal, kDiagonal };
  Dir dir = Dir::kVertical;
  int x = 0;
  int y = 0;
  friend auto operator<=>(const LatticeEdge&, const LatticeEdge&) = default;
};

// The 3 or 4 lattice segments bounding a cell.
std::vector<LatticeEdge> boundary_edges(const Cell& cell);

// Centroid in units of 1/6, so that triangle centroids stay integral.
Point centroid_sixths(const Cell& cell);

// Polygon corners, counterclockwise.
std::vector<Point> outline(const Cell& cell);

// Neighbour lists (sorted indices) of cells sharing a lattice segment.
std::vector<std::vector<std::size_t>> cell_adjacency(
    const std::vector<Cell>& cells);

struct RegionSpec {
  int a = 1;
  std::vector<int> d;

  int total_size() const;
  int layer_count() const { return static_cast<int>(d.size()); }
  friend auto operator<=>(const RegionSpec&, const RegionSpec&) = default;
};

// "D_7(4,2,5,4)".
std::string to_string(const RegionSpec& spec);

// The spec of the region turned upside down: the sequence reversed and the
// side replaced by the width T - a.
RegionSpec flipped(const RegionSpec& spec);

// A run of same-level, same-kind cells; lines alternate in colour from the
// top of the region down.
struct CellLine {
  int level = 0;
  CellKind kind = CellKind::kSquare;
  Color color = Color::kWhite;
  std::size_t begin = 0;  // index range into Region::cells()
  std::size_t end = 0;
};

struct Corners {
  Point north;  // on the top diagonal, where the two eastern boundaries meet
  Point east;
  Point south;
  Point west;
};

class Region {
 public:
  const RegionSpec& spec() const { return spec_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<CellLine>& lines() const { return lines_; }
  const Corners& corners() const { return corners_; }
  // Drawn-in levels from the top down; k - 1 of them.
  const std::vector<int>& drawn_levels() const { return drawn_; }
  // Indices into cells(), one vector per layer, top layer first. Up
  // triangles belong to the layer above their diagonal.
  const std::vector<std::vector<std::size_t>>& layers() const {
    return layers_;
  }
  // Boundary lattice points from the top diagonal down, one per level.
  const std::vector<Point>& northeast_path() const { return northeast_; }
  const std::vector<Point>& southwest_path() const { return southwest_; }

  int total_size() const { return spec_.total_size(); }
  int width() const { return width_; }
  std::size_t count(Color color) const;

 private:
  friend Region build_region(const RegionSpec& spec);

  RegionSpec spec_;
  std::vector<Cell> cells_;
  std::vector<CellLine> lines_;
  Corners corners_;
  std::vector<int> drawn_;
  std::vector<std::vector<std::size_t>> layers_;
  std::vector<Point> northeast_;
  std::vector<Point> southwest_;
  int width_ = 0;
};

// Throws SpecInvalid with a distinct reason for each failed condition.
Region build_region(const RegionSpec& spec);

struct RegionStats {
  int p = 0;  // lines of black squares
  int m = 0;  // lines of black up triangles
  int n = 0;  // lines of black down triangles
  int q = 0;  // lines of black cells
  int w = 0;  // white squares in the bottom line
  int C = 0;  // black squares plus black up triangles
  int T = 0;
};

// Counted directly from the cell lines.
RegionStats structural_stats(const Region& region);

// C - w(w+1)/2; throws ExponentNegative if the count would not be integral.
long formula_exponent(const RegionStats& stats);
BigCount formula_count(const Region& region);

// The only side length that can give a valid region for this sequence: the
// number of south steps taken by the northeast boundary. Empty when the
// bottom diagonal crosses black squares or the sequence is not positive.
std::optional<int> compatible_side(const std::vector<int>& d);

// All compositions of 1..max_total, by total then lexicographically.
std::vector<std::vector<int>> compositions_up_to(int max_total);

// The valid specs among those compositions, each at its compatible side.
std::vector<RegionSpec> valid_specs_up_to(int max_total);

}  // namespace douglas

#endif  // DOUGLAS_REGION_HPP_
