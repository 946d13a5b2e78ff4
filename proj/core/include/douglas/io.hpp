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

// JSON forms. Counts and weights travel as decimal strings ("p/q" for
// non-integral rationals). Parsers throw std::invalid_argument on malformed
// input.

#ifndef DOUGLAS_IO_HPP_
#define DOUGLAS_IO_HPP_

#include <string>
#include <string_view>

#include "douglas/match_graph.hpp"
#include "douglas/region.hpp"
#include "douglas/shuffle.hpp"

namespace douglas {

// {"a": 7, "d": [4, 2, 5, 4]}
std::string spec_to_json(const RegionSpec& spec);
RegionSpec spec_from_json(std::string_view text);

// {"spec", "cells": [{kind, color, level, anchor}], "corners", "stats"}
std::string region_to_json(const Region& region);

// {"vertices": [{id, part, x, y}], "edges": [{u, v, w}]}
std::string graph_to_json(const MatchGraph& graph);
MatchGraph graph_from_json(std::string_view text);

// {"rows", "cols", "entries": [["p/q", ...], ...]}
std::string pattern_to_json(const WeightPattern& pattern);
WeightPattern pattern_from_json(std::string_view text);

std::string_view to_string(CellKind kind);
std::string_view to_string(Color color);

}  // namespace douglas

#endif  // DOUGLAS_IO_HPP_
