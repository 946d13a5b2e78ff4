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


// Independent oracles for the tests: slow, short, and sharing no code with
// the engines they check beyond the core value types.

#ifndef DOUGLAS_TESTS_ORACLES_HPP_
#define DOUGLAS_TESTS_ORACLES_HPP_

#include <compare>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "douglas/condensation.hpp"
#include "douglas/match_graph.hpp"
#include "douglas/numeric.hpp"
#include "douglas/region.hpp"

namespace douglas::testing {

// Enumerates perfect matchings by always matching the first free vertex.
Rational brute_force_mgf(const MatchGraph& graph);
BigCount brute_force_count(const MatchGraph& graph);

struct ScannedCell {
  CellKind kind = CellKind::kSquare;
  Color color = Color::kWhite;
  Point anchor;
  friend auto operator<=>(const ScannedCell&, const ScannedCell&) = default;
};

// The closed lattice polygon bounded by the two boundary paths and the
// staircases along the top and bottom diagonals.
std::vector<Point> boundary_polygon(const Region& region);

// Unit squares whose centre lies inside boundary_polygon, split on drawn
// levels and coloured by the parity of their line index below the top
// diagonal. Sorted.
std::vector<ScannedCell> scan_cells(const Region& region);

// The region's own cells in the same form, sorted.
std::vector<ScannedCell> region_cells(const Region& region);

// Rectangular grid graph of even side lengths with every boundary edge and
// a random subset of interior edges; vertex (i, j) is black iff i + j is
// even. Corners in cyclic order are black, white, black, white.
struct GridFixture {
  MatchGraph graph;
  CornerQuad corners;
};
GridFixture random_grid(std::mt19937_64& rng, int cols, int rows,
                        double keep = 0.7);

// Random positive rational p/q with 1 <= p, q <= limit.
Rational random_rational(std::mt19937_64& rng, int limit = 9);

std::uint64_t fnv1a(std::string_view text);

}  // namespace douglas::testing

#endif  // DOUGLAS_TESTS_ORACLES_HPP_
