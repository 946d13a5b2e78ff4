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

#include "douglas/io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace douglas {
namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad field '") + key +
                                "': " + e.what());
  }
}

Rational rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<long>());
  throw std::invalid_argument("weights must be integers or \"p/q\" strings");
}

Json point(const Point& p) { return Json::array({p.x, p.y}); }

}  // namespace

std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::kSquare: return "square";
    case CellKind::kTriangleUp: return "up";
    case CellKind::kTriangleDown: return "down";
  }
  return "?";
}

std::string_view to_string(Color color) {
  return color == Color::kBlack ? "black" : "white";
}

std::string spec_to_json(const RegionSpec& spec) {
  Json j;
  j["a"] = spec.a;
  j["d"] = spec.d;
  return j.dump();
}

RegionSpec spec_from_json(std::string_view text) {
  const Json j = parse(text);
  RegionSpec spec;
  spec.a = field<int>(j, "a");
  spec.d = field<std::vector<int>>(j, "d");
  return spec;
}

std::string region_to_json(const Region& region) {
  Json j;
  j["spec"] = Json::parse(spec_to_json(region.spec()));
  Json cells = Json::array();
  for (const Cell& c : region.cells()) {
    cells.push_back({{"kind", to_string(c.kind)},
                     {"color", to_string(c.color)},
                     {"level", c.level},
                     {"anchor", point(c.anchor)}});
  }
  j["cells"] = std::move(cells);
  const Corners& k = region.corners();
  j["corners"] = {{"north", point(k.north)},
                  {"east", point(k.east)},
                  {"south", point(k.south)},
                  {"west", point(k.west)}};
  j["drawn_levels"] = region.drawn_levels();
  const RegionStats s = structural_stats(region);
  j["stats"] = {{"p", s.p}, {"m", s.m}, {"n", s.n}, {"q", s.q},
                {"w", s.w}, {"C", s.C}, {"T", s.T}};
  return j.dump();
}

std::string graph_to_json(const MatchGraph& graph) {
  Json vertices = Json::array();
  for (const GraphVertex& v : graph.vertices()) {
    vertices.push_back({{"id", v.id},
                        {"part", v.part == Part::kBlack ? "black" : "white"},
                        {"x", v.position.x},
                        {"y", v.position.y}});
  }
  Json edges = Json::array();
  for (const GraphEdge& e : graph.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"w", to_string(e.weight)}});
  }
  Json j;
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j.dump();
}

MatchGraph graph_from_json(std::string_view text) {
  const Json j = parse(text);
  MatchGraph g;
  for (const Json& v : field<Json>(j, "vertices")) {
    const std::string part = field<std::string>(v, "part");
    if (part != "black" && part != "white") {
      throw std::invalid_argument("part must be \"black\" or \"white\"");
    }
    g.add_vertex(part == "black" ? Part::kBlack : Part::kWhite,
                 {field<int>(v, "x"), field<int>(v, "y")},
                 field<int>(v, "id"));
  }
  for (const Json& e : field<Json>(j, "edges")) {
    Rational w(1);
    if (e.contains("w")) w = rational_field(e.at("w"));
    g.add_edge(field<std::size_t>(e, "u"), field<std::size_t>(e, "v"), w);
  }
  return g;
}

std::string pattern_to_json(const WeightPattern& pattern) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < pattern.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < pattern.cols(); ++c) {
      row.push_back(to_string(pattern(r, c)));
    }
    entries.push_back(std::move(row));
  }
  Json j;
  j["rows"] = pattern.rows();
  j["cols"] = pattern.cols();
  j["entries"] = std::move(entries);
  return j.dump();
}

WeightPattern pattern_from_json(std::string_view text) {
  const Json j = parse(text);
  const auto rows = field<std::size_t>(j, "rows");
  const auto cols = field<std::size_t>(j, "cols");
  const Json entries = field<Json>(j, "entries");
  if (!entries.is_array() || entries.size() != rows) {
    throw std::invalid_argument("entries must have 'rows' rows");
  }
  WeightPattern out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) {
      throw std::invalid_argument("every row needs 'cols' entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = rational_field(entries[r][c]);
    }
  }
  return out;
}

}  // namespace douglas
