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

#include "douglas/region.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "douglas/errors.hpp"

namespace douglas {
namespace {

using Dir = LatticeEdge::Dir;

// The infinite strip between the top and bottom diagonals, truncated to a
// window wide enough to hold any region with this sequence, and coloured by
// breadth-first search from the top diagonal.
class Strip {
 public:
  explicit Strip(const std::vector<int>& d) : total_(0) {
    for (int v : d) total_ += v;
    drawn_.assign(total_ + 1, false);
    int acc = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      acc += d[i];
      drawn_[acc] = true;
    }
    lo_ = -total_ - 1;
    hi_ = total_ + 1;
    Colour();
  }

  int total() const { return total_; }
  bool drawn(int level) const {
    return level <= 0 && level >= -total_ && drawn_[-level];
  }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  // The piece of square (i, i + level) touching the given side; for
  // undivided squares the square itself.
  Color colour(int level, int i, bool lower_piece) const {
    return colours_[Slot(level, i) * 2 + (drawn(level) && lower_piece)];
  }

 private:
  std::size_t Slot(int level, int i) const {
    if (level > 0 || level < -total_ || i < lo_ || i > hi_) {
      throw std::logic_error("lattice query outside the coloured strip");
    }
    return static_cast<std::size_t>(-level) * (hi_ - lo_ + 1) + (i - lo_);
  }

  void Colour() {
    std::vector<Cell> cells;
    std::vector<std::size_t> slot_of;
    for (int r = 0; r <= total_; ++r) {
      int level = -r;
      for (int i = lo_; i <= hi_; ++i) {
        Point anchor{i, i + level};
        std::size_t slot = Slot(level, i) * 2;
        if (drawn(level)) {
          cells.push_back({CellKind::kTriangleUp, Color::kWhite, level, anchor});
          slot_of.push_back(slot);
          cells.push_back(
              {CellKind::kTriangleDown, Color::kWhite, level, anchor});
          slot_of.push_back(slot + 1);
        } else {
          cells.push_back({CellKind::kSquare, Color::kWhite, level, anchor});
          slot_of.push_back(slot);
        }
      }
    }
    auto adjacency = cell_adjacency(cells);
    std::vector<int> seen(cells.size(), -1);
    std::deque<std::size_t> queue;
    // Squares on the top diagonal are white; start from the first of them.
    seen[0] = 0;
    queue.push_back(0);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adjacency[u]) {
        if (seen[v] < 0) {
          seen[v] = 1 - seen[u];
          queue.push_back(v);
        } else if (seen[v] == seen[u]) {
          throw std::logic_error("cell adjacency is not bipartite");
        }
      }
    }
    colours_.assign(Slot(-total_, hi_) * 2 + 2, Color::kWhite);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (seen[c] < 0) throw std::logic_error("strip is not connected");
      Color col = seen[c] == 0 ? Color::kWhite : Color::kBlack;
      colours_[slot_of[c]] = col;
      if (cells[c].kind == CellKind::kSquare) colours_[slot_of[c] + 1] = col;
    }
    for (int i = lo_; i <= hi_; ++i) {
      if (colour(0, i, false) != Color::kWhite) {
        throw std::logic_error("top diagonal crosses a black square");
      }
    }
  }

  int total_;
  int lo_ = 0;
  int hi_ = 0;
  std::vector<bool> drawn_;
  std::vector<Color> colours_;
};

// Walks from the top diagonal to the bottom one. Going south the cell on the
// walker's right (west) must be black for the northeast boundary and on the
// left (east) for the southwest one; exactly one of the two candidate cells
// qualifies at every step.
std::vector<Point> walk(const Strip& strip, Point start, bool northeast) {
  std::vector<Point> pts{start};
  Point p = start;
  for (int step = 0; step < strip.total(); ++step) {
    int level = p.y - p.x;
    bool south_black;
    bool east_black;
    if (northeast) {
      // West of the south edge: square (x-1, y-1), lower piece.
      south_black = strip.colour(level, p.x - 1, true) == Color::kBlack;
      // South of the east edge: square (x, y-1), upper piece.
      east_black = strip.colour(level - 1, p.x, false) == Color::kBlack;
    } else {
      // East of the south edge: square (x, y-1), upper piece.
      south_black = strip.colour(level - 1, p.x, false) == Color::kBlack;
      // North of the east edge: square (x, y), lower piece.
      east_black = strip.colour(level, p.x, true) == Color::kBlack;
    }
    if (south_black == east_black) {
      throw std::logic_error("boundary step is ambiguous");
    }
    if (south_black) {
      --p.y;
    } else {
      ++p.x;
    }
    pts.push_back(p);
  }
  return pts;
}

int south_steps(const std::vector<Point>& path) {
  return path.front().y - path.back().y;
}

bool positive(const std::vector<int>& d) {
  return !d.empty() &&
         std::all_of(d.begin(), d.end(), [](int v) { return v >= 1; });
}

}  // namespace

std::vector<LatticeEdge> boundary_edges(const Cell& cell) {
  const int i = cell.anchor.x;
  const int j = cell.anchor.y;
  LatticeEdge left{Dir::kVertical, i, j};
  LatticeEdge right{Dir::kVertical, i + 1, j};
  LatticeEdge bottom{Dir::kHorizontal, i, j};
  LatticeEdge top{Dir::kHorizontal, i, j + 1};
  LatticeEdge diagonal{Dir::kDiagonal, i, j};
  switch (cell.kind) {
    case CellKind::kSquare:
      return {left, right, bottom, top};
    case CellKind::kTriangleUp:
      return {left, top, diagonal};
    case CellKind::kTriangleDown:
      return {right, bottom, diagonal};
  }
  return {};
}

Point centroid_sixths(const Cell& cell) {
  const int i = 6 * cell.anchor.x;
  const int j = 6 * cell.anchor.y;
  switch (cell.kind) {
    case CellKind::kSquare:
      return {i + 3, j + 3};
    case CellKind::kTriangleUp:
      return {i + 2, j + 4};
    case CellKind::kTriangleDown:
      return {i + 4, j + 2};
  }
  return {};
}

std::vector<Point> outline(const Cell& cell) {
  const int i = cell.anchor.x;
  const int j = cell.anchor.y;
  switch (cell.kind) {
    case CellKind::kSquare:
      return {{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}};
    case CellKind::kTriangleUp:
      return {{i, j}, {i + 1, j + 1}, {i, j + 1}};
    case CellKind::kTriangleDown:
      return {{i, j}, {i + 1, j}, {i + 1, j + 1}};
  }
  return {};
}

std::vector<std::vector<std::size_t>> cell_adjacency(
    const std::vector<Cell>& cells) {
  std::map<LatticeEdge, std::vector<std::size_t>> sharing;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (const LatticeEdge& e : boundary_edges(cells[c])) {
      sharing[e].push_back(c);
    }
  }
  std::vector<std::vector<std::size_t>> adjacency(cells.size());
  for (const auto& [edge, owners] : sharing) {
    if (owners.size() > 2) {
      throw std::logic_error("lattice edge shared by more than two cells");
    }
    if (owners.size() == 2) {
      adjacency[owners[0]].push_back(owners[1]);
      adjacency[owners[1]].push_back(owners[0]);
    }
  }
  for (auto& row : adjacency) std::sort(row.begin(), row.end());
  return adjacency;
}

int RegionSpec::total_size() const {
  return std::accumulate(d.begin(), d.end(), 0);
}

std::string to_string(const RegionSpec& spec) {
  std::ostringstream out;
  out << "D_" << spec.a << "(";
  for (std::size_t i = 0; i < spec.d.size(); ++i) {
    if (i) out << ",";
    out << spec.d[i];
  }
  out << ")";
  return out.str();
}

RegionSpec flipped(const RegionSpec& spec) {
  return {spec.total_size() - spec.a,
          std::vector<int>(spec.d.rbegin(), spec.d.rend())};
}

std::size_t Region::count(Color color) const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(),
                    [color](const Cell& c) { return c.color == color; }));
}

Region build_region(const RegionSpec& spec) {
  if (spec.a < 1 || !positive(spec.d)) {
    throw SpecInvalid(InvalidReason::kNonPositive,
                      "a and every d_i must be at least 1");
  }
  const Strip strip(spec.d);
  const int total = strip.total();

  // Every square on the bottom diagonal has the same colour.
  if (strip.colour(-total, 0, false) == Color::kBlack) {
    throw SpecInvalid(InvalidReason::kEllPrimeOnBlack, to_string(spec));
  }

  Region region;
  region.spec_ = spec;
  region.northeast_ = walk(strip, {0, 0}, true);
  const int drop = south_steps(region.northeast_);
  if (drop != spec.a) {
    std::ostringstream detail;
    detail << to_string(spec) << " has its east corner at height " << -drop
           << " and its west corner at height " << -spec.a;
    throw SpecInvalid(InvalidReason::kCornersNotLevel, detail.str());
  }
  region.southwest_ = walk(strip, {-spec.a, -spec.a}, false);
  region.width_ = total - spec.a;
  region.corners_ = {region.northeast_.front(), region.northeast_.back(),
                     region.southwest_.back(), region.southwest_.front()};

  for (int r = 0; r <= total; ++r) {
    const int west = region.southwest_[r].x;
    const int east = region.northeast_[r].x;
    if (west >= east) {
      std::ostringstream detail;
      detail << to_string(spec) << " at level " << -r;
      throw SpecInvalid(InvalidReason::kBoundariesIntersect, detail.str());
    }
  }

  int acc = 0;
  for (std::size_t i = 0; i + 1 < spec.d.size(); ++i) {
    acc += spec.d[i];
    region.drawn_.push_back(-acc);
  }

  region.layers_.resize(spec.d.size());
  std::size_t layer = 0;
  auto add_line = [&](int level, CellKind kind, int west, int east,
                      std::size_t target_layer) {
    CellLine line;
    line.level = level;
    line.kind = kind;
    line.begin = region.cells_.size();
    bool lower = kind == CellKind::kTriangleDown;
    line.color = strip.colour(level, west, lower);
    for (int i = west; i < east; ++i) {
      Color c = strip.colour(level, i, lower);
      if (c != line.color) throw std::logic_error("line is not monochrome");
      region.layers_[target_layer].push_back(region.cells_.size());
      region.cells_.push_back({kind, c, level, {i, i + level}});
    }
    line.end = region.cells_.size();
    region.lines_.push_back(line);
  };
  for (int r = 0; r <= total; ++r) {
    const int level = -r;
    const int west = region.southwest_[r].x;
    const int east = region.northeast_[r].x;
    if (strip.drawn(level)) {
      add_line(level, CellKind::kTriangleUp, west, east, layer);
      ++layer;
      add_line(level, CellKind::kTriangleDown, west, east, layer);
    } else {
      add_line(level, CellKind::kSquare, west, east, layer);
    }
  }

  // The cells must form one piece whose colouring is proper.
  auto adjacency = cell_adjacency(region.cells_);
  std::vector<bool> seen(region.cells_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adjacency[u]) {
      if (region.cells_[u].color == region.cells_[v].color) {
        throw std::logic_error("adjacent cells share a colour");
      }
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != region.cells_.size()) {
    throw std::logic_error("region is not connected: " + to_string(spec));
  }
  return region;
}

RegionStats structural_stats(const Region& region) {
  RegionStats s;
  s.T = region.total_size();
  std::set<int> square_levels;
  std::set<int> up_levels;
  std::set<int> down_levels;
  const int bottom = -s.T;
  for (const Cell& c : region.cells()) {
    if (c.color == Color::kBlack) {
      switch (c.kind) {
        case CellKind::kSquare:
          square_levels.insert(c.level);
          ++s.C;
          break;
        case CellKind::kTriangleUp:
          up_levels.insert(c.level);
          ++s.C;
          break;
        case CellKind::kTriangleDown:
          down_levels.insert(c.level);
          break;
      }
    } else if (c.kind == CellKind::kSquare && c.level == bottom) {
      ++s.w;
    }
  }
  s.p = static_cast<int>(square_levels.size());
  s.m = static_cast<int>(up_levels.size());
  s.n = static_cast<int>(down_levels.size());
  s.q = s.p + s.m + s.n;
  return s;
}

long formula_exponent(const RegionStats& stats) {
  long e = static_cast<long>(stats.C) -
           static_cast<long>(stats.w) * (stats.w + 1) / 2;
  if (e < 0) {
    throw ExponentNegative("C - w(w+1)/2 = " + std::to_string(e));
  }
  return e;
}

BigCount formula_count(const Region& region) {
  return pow2(static_cast<std::uint64_t>(
      formula_exponent(structural_stats(region))));
}

std::optional<int> compatible_side(const std::vector<int>& d) {
  if (!positive(d)) return std::nullopt;
  const Strip strip(d);
  if (strip.colour(-strip.total(), 0, false) == Color::kBlack) {
    return std::nullopt;
  }
  int side = south_steps(walk(strip, {0, 0}, true));
  if (side < 1) return std::nullopt;
  return side;
}

std::vector<std::vector<int>> compositions_up_to(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Depth-first in lexicographic order, one total at a time.
  auto extend = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      current.push_back(part);
      self(self, remaining - part);
      current.pop_back();
    }
  };
  for (int total = 1; total <= max_total; ++total) extend(extend, total);
  return out;
}

std::vector<RegionSpec> valid_specs_up_to(int max_total) {
  std::vector<RegionSpec> out;
  for (auto& d : compositions_up_to(max_total)) {
    auto side = compatible_side(d);
    if (!side) continue;
    RegionSpec spec{*side, d};
    try {
      build_region(spec);
    } catch (const SpecInvalid&) {
      continue;
    }
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace douglas
