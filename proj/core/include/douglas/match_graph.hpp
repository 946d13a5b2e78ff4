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

#ifndef DOUGLAS_MATCH_GRAPH_HPP_
#define DOUGLAS_MATCH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "douglas/numeric.hpp"
#include "douglas/region.hpp"

namespace douglas {

enum class Part : std::uint8_t { kBlack, kWhite };

struct GraphVertex {
  int id = 0;  // caller-visible label, kept across subgraphs
  Part part = Part::kBlack;
  Point position;
};

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight{1};
};

// Bipartite graph with embedded vertices and exact nonnegative weights.
// Zero-weight edges are kept; they count as edges for degrees and forced
// edges but contribute nothing to weighted sums.
class MatchGraph {
 public:
  // id defaults to the vertex index.
  std::size_t add_vertex(Part part, Point position, std::optional<int> id = {});
  // Throws std::invalid_argument unless u and v lie in opposite parts and
  // the weight is nonnegative.
  std::size_t add_edge(std::size_t u, std::size_t v, Rational weight = 1);

  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<std::size_t>& incident(std::size_t v) const {
    return incident_[v];
  }
  std::size_t other_end(std::size_t edge, std::size_t v) const {
    return edges_[edge].u == v ? edges_[edge].v : edges_[edge].u;
  }

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::size_t count(Part part) const;
  bool unit_weights() const;

  std::optional<std::size_t> find_id(int id) const;

  // The subgraph induced by the vertices not listed.
  MatchGraph without(const std::vector<std::size_t>& removed) const;
  MatchGraph induced(const std::vector<bool>& keep) const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

// One vertex per cell (id = cell index, position = centroid in sixths,
// part = cell colour) and a unit edge per shared lattice segment.
MatchGraph dual_graph(const Region& region);

struct ForcedReduction {
  MatchGraph graph;
  Rational multiplier{1};
  // An unmatched vertex became isolated: the original has no matching.
  bool isolated = false;
  // M(original) = multiplier * M(graph), or 0 when isolated.
};

ForcedReduction reduce_forced(const MatchGraph& graph);

struct CountOptions {
  // Largest index gap allowed between matched vertices in the sweep order;
  // the state is a bitmask over this window.
  int max_frontier = 48;
};

// Gap between the farthest-apart adjacent vertices in the sweep order the
// counter would use.
int frontier_width(const MatchGraph& graph);

// Unweighted count; throws std::invalid_argument unless every weight is 1
// and SizeLimit when the frontier is too wide.
BigCount count_matchings(const MatchGraph& graph,
                         const CountOptions& options = {});

// Sum over perfect matchings of the product of edge weights.
Rational matching_generating_function(const MatchGraph& graph,
                                      const CountOptions& options = {});

// Ryser's formula over the biadjacency matrix; at most 16 vertices per side.
Rational permanent_oracle(const MatchGraph& graph);
inline constexpr std::size_t kPermanentMaxSide = 16;

std::vector<MatchGraph> connected_components(const MatchGraph& graph);

// Text form of the embedded graph that ignores ids and vertex order and is
// invariant under translation by whole lattice steps (multiples of 6 in
// both coordinates). Equal signatures mean the two drawings coincide after
// a lattice translation.
std::string embedded_signature(const MatchGraph& graph);

// A perfect matching as edge indices, built greedily along the sweep order
// while keeping the rest matchable; empty optional when none exists.
std::optional<std::vector<std::size_t>> sample_matching(
    const MatchGraph& graph, const CountOptions& options = {});

}  // namespace douglas

#endif  // DOUGLAS_MATCH_GRAPH_HPP_
