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

#ifndef DOUGLAS_RENDER_HPP_
#define DOUGLAS_RENDER_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "douglas/region.hpp"

namespace douglas {

// Pairs of cell indices joined by a domino.
using CellPairs = std::vector<std::pair<std::size_t, std::size_t>>;

// Two characters per unit square, top row first: "bb"/"ww" for a whole
// square, the up then the down triangle in capitals for a split one
// ("BW", "WB"), blanks outside the region.
std::string render_ascii(const Region& region);

// SVG 1.1; each cell a filled polygon, with an optional overlay of segments
// between paired centroids.
std::string render_svg(const Region& region, const CellPairs& matching = {},
                       int unit = 24);

}  // namespace douglas

#endif  // DOUGLAS_RENDER_HPP_
