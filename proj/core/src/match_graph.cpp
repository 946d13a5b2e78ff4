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

#include "douglas/match_graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>
#include <tuple>
#include <stdexcept>
#include <unordered_map>

#include "douglas/errors.hpp"

namespace douglas {

std::size_t MatchGraph::add_vertex(Part part, Point position,
                                   std::optional<int> id) {
  const std::size_t index = vertices_.size();
  vertices_.push_back({id.value_or(static_cast<int>(index)), part, position});
  incident_.emplace_back();
  return index;
}

std::size_t MatchGraph::add_edge(std::size_t u, std::size_t v,
                                 Rational weight) {
  if (u >= vertices_.size() || v >= vertices_.size()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (vertices_[u].part == vertices_[v].part) {
    throw std::invalid_argument("edge joins two vertices of the same part");
  }
  weight.canonicalize();
  if (weight < 0) throw std::invalid_argument("negative edge weight");
  const std::size_t index = edges_.size();
  edges_.push_back({u, v, std::move(weight)});
  incident_[u].push_back(index);
  incident_[v].push_back(index);
  return index;
}

std::size_t MatchGraph::count(Part part) const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(),
                    [part](const GraphVertex& v) { return v.part == part; }));
}

bool MatchGraph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const GraphEdge& e) { return e.weight == 1; });
}

std::optional<std::size_t> MatchGraph::find_id(int id) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].id == id) return v;
  }
  return std::nullopt;
}

MatchGraph MatchGraph::without(const std::vector<std::size_t>& removed) const {
  std::vector<bool> keep(vertices_.size(), true);
  for (std::size_t v : removed) {
    if (v >= keep.size()) throw std::invalid_argument("vertex out of range");
    keep[v] = false;
  }
  return induced(keep);
}

MatchGraph MatchGraph::induced(const std::vector<bool>& keep) const {
  MatchGraph out;
  std::vector<std::size_t> remap(vertices_.size(), 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!keep[v]) continue;
    remap[v] = out.add_vertex(vertices_[v].part, vertices_[v].position,
                              vertices_[v].id);
  }
  for (const GraphEdge& e : edges_) {
    if (keep[e.u] && keep[e.v]) out.add_edge(remap[e.u], remap[e.v], e.weight);
  }
  return out;
}

MatchGraph dual_graph(const Region& region) {
  MatchGraph g;
  const auto& cells = region.cells();
  for (const Cell& c : cells) {
    g.add_vertex(c.color == Color::kBlack ? Part::kBlack : Part::kWhite,
                 centroid_sixths(c));
  }
  auto adjacency = cell_adjacency(cells);
  for (std::size_t u = 0; u < cells.size(); ++u) {
    for (std::size_t v : adjacency[u]) {
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

ForcedReduction reduce_forced(const MatchGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) degree[v] = graph.incident(v).size();

  ForcedReduction out;
  std::deque<std::size_t> pending;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] <= 1) pending.push_back(v);
  }
  auto drop = [&](std::size_t v) {
    alive[v] = false;
    for (std::size_t e : graph.incident(v)) {
      std::size_t u = graph.other_end(e, v);
      if (alive[u] && --degree[u] <= 1) pending.push_back(u);
    }
  };
  while (!pending.empty()) {
    std::size_t v = pending.front();
    pending.pop_front();
    if (!alive[v]) continue;
    if (degree[v] == 0) {
      out.isolated = true;
      out.multiplier = 0;
      return out;
    }
    if (degree[v] != 1) continue;
    for (std::size_t e : graph.incident(v)) {
      std::size_t u = graph.other_end(e, v);
      if (!alive[u]) continue;
      out.multiplier *= graph.edges()[e].weight;
      alive[v] = false;
      drop(u);
      break;
    }
  }
  out.graph = graph.induced(alive);
  return out;
}

namespace {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

using SweepKey = std::array<long, 2>;

// Positions in the sweep together with the widest gap along an edge.
struct Sweep {
  std::vector<std::size_t> order;
  std::vector<std::size_t> rank;
  int width = 0;
};

Sweep make_sweep(const MatchGraph& graph,
                 const std::function<SweepKey(const Point&)>& key) {
  Sweep s;
  const std::size_t n = graph.size();
  s.order.resize(n);
  for (std::size_t v = 0; v < n; ++v) s.order[v] = v;
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return key(graph.vertices()[a].position) <
                            key(graph.vertices()[b].position);
                   });
  s.rank.resize(n);
  for (std::size_t r = 0; r < n; ++r) s.rank[s.order[r]] = r;
  for (const GraphEdge& e : graph.edges()) {
    long gap = static_cast<long>(s.rank[e.u]) - static_cast<long>(s.rank[e.v]);
    s.width = std::max(s.width, static_cast<int>(gap < 0 ? -gap : gap));
  }
  return s;
}

// Nonincreasing diagonal level first; plain row, column and anti-diagonal
// sweeps are kept as fallbacks for graphs drawn in other orientations.
Sweep best_sweep(const MatchGraph& graph) {
  const std::array<std::function<SweepKey(const Point&)>, 4> keys = {
      [](const Point& p) { return SweepKey{p.x - p.y, p.x + p.y}; },
      [](const Point& p) { return SweepKey{p.y, p.x}; },
      [](const Point& p) { return SweepKey{p.x, p.y}; },
      [](const Point& p) { return SweepKey{p.x + p.y, p.y - p.x}; },
  };
  Sweep best = make_sweep(graph, keys[0]);
  for (std::size_t k = 1; k < keys.size(); ++k) {
    Sweep s = make_sweep(graph, keys[k]);
    if (s.width < best.width) best = std::move(s);
  }
  return best;
}

// Profile dynamic program. Bit b of a state marks the vertex b places ahead
// in the sweep as already matched to an earlier vertex.
template <typename Value, bool kWeighted>
Value sweep_count(const MatchGraph& graph, const CountOptions& options) {
  if (graph.empty()) return Value(1);
  if (graph.count(Part::kBlack) != graph.count(Part::kWhite)) return Value(0);
  const Sweep sweep = best_sweep(graph);
  const int limit = std::min(options.max_frontier, 62);
  if (sweep.width > limit) {
    throw SizeLimit("sweep frontier " + std::to_string(sweep.width) +
                    " exceeds the limit " + std::to_string(limit));
  }
  std::unordered_map<std::uint64_t, Value> states;
  std::unordered_map<std::uint64_t, Value> next;
  states.emplace(0, Value(1));
  for (std::size_t r = 0; r < sweep.order.size(); ++r) {
    const std::size_t v = sweep.order[r];
    next.clear();
    next.reserve(states.size() * 2);
    for (const auto& [mask, value] : states) {
      if (mask & 1U) {
        next[mask >> 1] += value;
        continue;
      }
      for (std::size_t e : graph.incident(v)) {
        const std::size_t u = graph.other_end(e, v);
        if (sweep.rank[u] <= r) continue;
        const std::size_t bit = sweep.rank[u] - r;
        if ((mask >> bit) & 1U) continue;
        const std::uint64_t key = (mask | (std::uint64_t{1} << bit)) >> 1;
        if constexpr (kWeighted) {
          const Rational& w = graph.edges()[e].weight;
          if (w == 0) continue;
          next[key] += value * w;
        } else {
          next[key] += value;
        }
      }
    }
    states.swap(next);
    if (states.empty()) return Value(0);
  }
  auto it = states.find(0);
  return it == states.end() ? Value(0) : it->second;
}

// Ryser's formula with a Gray-code walk over column subsets. Row sums are
// kept incrementally; the product is taken in Value arithmetic.
template <typename Value>
Value ryser(const std::vector<std::vector<Value>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return Value(1);
  std::vector<Value> row_sums(n, Value(0));
  Value total(0);
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const std::uint64_t next = step ^ (step >> 1);
    const std::uint64_t flipped_bit = next ^ gray;
    const std::size_t col =
        static_cast<std::size_t>(__builtin_ctzll(flipped_bit));
    const bool added = (next & flipped_bit) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += matrix[i][col];
      } else {
        row_sums[i] -= matrix[i][col];
      }
    }
    gray = next;
    Value product(1);
    for (std::size_t i = 0; i < n && product != 0; ++i) product *= row_sums[i];
    const bool odd = __builtin_popcountll(gray) % 2 == 1;
    if (odd == (n % 2 == 1)) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

}  // namespace

int frontier_width(const MatchGraph& graph) {
  return graph.empty() ? 0 : best_sweep(graph).width;
}

BigCount count_matchings(const MatchGraph& graph,
                         const CountOptions& options) {
  if (!graph.unit_weights()) {
    throw std::invalid_argument(
        "count_matchings needs unit weights; use the generating function");
  }
  return sweep_count<BigCount, false>(graph, options);
}

Rational matching_generating_function(const MatchGraph& graph,
                                      const CountOptions& options) {
  return sweep_count<Rational, true>(graph, options);
}

Rational permanent_oracle(const MatchGraph& graph) {
  std::vector<std::size_t> black;
  std::vector<std::size_t> white;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    (graph.vertices()[v].part == Part::kBlack ? black : white).push_back(v);
  }
  if (black.size() != white.size()) return Rational(0);
  const std::size_t n = black.size();
  if (n > kPermanentMaxSide) {
    throw SizeLimit("permanent oracle handles at most " +
                    std::to_string(kPermanentMaxSide) + " vertices per side");
  }
  std::vector<std::size_t> row(graph.size());
  std::vector<std::size_t> col(graph.size());
  for (std::size_t i = 0; i < n; ++i) {
    row[black[i]] = i;
    col[white[i]] = i;
  }
  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, 0));
  for (const GraphEdge& e : graph.edges()) {
    const bool u_black = graph.vertices()[e.u].part == Part::kBlack;
    const std::size_t b = u_black ? e.u : e.v;
    const std::size_t w = u_black ? e.v : e.u;
    matrix[row[b]][col[w]] += e.weight;
  }

  // Small nonnegative integer matrices run in 128-bit arithmetic when no
  // partial product can overflow.
  bool integral = true;
  Rational bound(1);
  for (const auto& r : matrix) {
    Rational sum(0);
    for (const Rational& x : r) {
      if (!is_integer(x)) integral = false;
      sum += x;
    }
    bound *= sum;
  }
  bound *= pow2(n);
  const Rational ceiling(pow2(120));
  if (integral && bound < ceiling) {
    std::vector<std::vector<Int128>> small(n, std::vector<Int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        small[i][j] = matrix[i][j].get_num().get_si();
      }
    }
    const Int128 value = ryser(small);
    // Rebuild from two 64-bit halves.
    const bool negative = value < 0;
    const UInt128 magnitude =
        negative ? static_cast<UInt128>(-value)
                 : static_cast<UInt128>(value);
    BigCount out(static_cast<unsigned long>(magnitude >> 64));
    out <<= 64;
    out += BigCount(static_cast<unsigned long>(magnitude));
    if (negative) out = -out;
    return Rational(out);
  }
  return ryser(matrix);
}

std::vector<MatchGraph> connected_components(const MatchGraph& graph) {
  std::vector<int> label(graph.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < graph.size(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : graph.incident(v)) {
        std::size_t u = graph.other_end(e, v);
        if (label[u] < 0) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  std::vector<MatchGraph> out;
  for (int c = 0; c < next; ++c) {
    std::vector<bool> keep(graph.size());
    for (std::size_t v = 0; v < graph.size(); ++v) keep[v] = label[v] == c;
    out.push_back(graph.induced(keep));
  }
  return out;
}

std::optional<std::vector<std::size_t>> sample_matching(
    const MatchGraph& graph, const CountOptions& options) {
  // Structure only: a unit-weight copy decides feasibility.
  MatchGraph shape;
  for (const GraphVertex& v : graph.vertices()) {
    shape.add_vertex(v.part, v.position, v.id);
  }
  for (const GraphEdge& e : graph.edges()) shape.add_edge(e.u, e.v);
  if (count_matchings(shape, options) == 0) return std::nullopt;

  const Sweep sweep = best_sweep(shape);
  std::vector<bool> keep(shape.size(), true);
  std::vector<std::size_t> chosen;
  for (std::size_t v : sweep.order) {
    if (!keep[v]) continue;
    bool placed = false;
    for (std::size_t e : shape.incident(v)) {
      const std::size_t u = shape.other_end(e, v);
      if (!keep[u]) continue;
      keep[v] = keep[u] = false;
      if (count_matchings(shape.induced(keep), options) > 0) {
        chosen.push_back(e);
        placed = true;
        break;
      }
      keep[v] = keep[u] = true;
    }
    if (!placed) throw std::logic_error("greedy matching lost feasibility");
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::string embedded_signature(const MatchGraph& graph) {
  if (graph.empty()) return "empty";
  auto floor6 = [](int v) { return v >= 0 ? v - v % 6 : v - ((v % 6) + 6) % 6; };
  int min_x = graph.vertices().front().position.x;
  int min_y = graph.vertices().front().position.y;
  for (const GraphVertex& v : graph.vertices()) {
    min_x = std::min(min_x, v.position.x);
    min_y = std::min(min_y, v.position.y);
  }
  const int dx = floor6(min_x);
  const int dy = floor6(min_y);
  auto shifted = [&](std::size_t v) {
    const Point& p = graph.vertices()[v].position;
    return std::make_tuple(p.x - dx, p.y - dy,
                           graph.vertices()[v].part == Part::kBlack ? 'b' : 'w');
  };
  std::vector<std::tuple<int, int, char>> vertices;
  for (std::size_t v = 0; v < graph.size(); ++v) vertices.push_back(shifted(v));
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::string> edges;
  for (const GraphEdge& e : graph.edges()) {
    auto a = shifted(e.u);
    auto b = shifted(e.v);
    if (b < a) std::swap(a, b);
    std::ostringstream s;
    s << std::get<0>(a) << ',' << std::get<1>(a) << '-' << std::get<0>(b) << ','
      << std::get<1>(b) << ':' << to_string(e.weight);
    edges.push_back(s.str());
  }
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  for (const auto& [x, y, part] : vertices) {
    out << part << x << ',' << y << ' ';
  }
  out << '|';
  for (const std::string& e : edges) out << ' ' << e;
  return out.str();
}

}  // namespace douglas
