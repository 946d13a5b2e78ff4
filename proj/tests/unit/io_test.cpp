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

#include <gtest/gtest.h>

#include <stdexcept>

#include "douglas/errors.hpp"

namespace douglas {
namespace {

TEST(Io, SpecRoundTrip) {
  const RegionSpec spec{7, {4, 2, 5, 4}};
  EXPECT_EQ(spec_to_json(spec), R"({"a":7,"d":[4,2,5,4]})");
  EXPECT_EQ(spec_from_json(spec_to_json(spec)), spec);
}

TEST(Io, SpecErrors) {
  EXPECT_THROW(spec_from_json("{"), std::invalid_argument);
  EXPECT_THROW(spec_from_json(R"({"a": 1})"), std::invalid_argument);
  EXPECT_THROW(spec_from_json(R"({"a": "x", "d": [1]})"), std::invalid_argument);
  EXPECT_THROW(spec_from_json("[]"), std::invalid_argument);
}

TEST(Io, RegionDump) {
  const std::string text = region_to_json(build_region({1, {1, 2}}));
  EXPECT_NE(text.find(R"("spec":{"a":1,"d":[1,2]})"), std::string::npos);
  EXPECT_NE(text.find(
                R"({"kind":"up","color":"black","level":-1,"anchor":[-1,-2]})"),
            std::string::npos);
  EXPECT_NE(text.find(R"("stats":{"p":1,"m":1,"n":0,"q":2,"w":2,"C":5,"T":3})"),
            std::string::npos);
}

TEST(Io, GraphRoundTrip) {
  MatchGraph g;
  const auto b = g.add_vertex(Part::kBlack, {0, 0}, 10);
  const auto w = g.add_vertex(Part::kWhite, {6, 0}, 11);
  g.add_edge(b, w, make_rational(5, 3));
  const std::string text = graph_to_json(g);
  EXPECT_EQ(text,
            R"({"vertices":[{"id":10,"part":"black","x":0,"y":0},)"
            R"({"id":11,"part":"white","x":6,"y":0}],)"
            R"("edges":[{"u":0,"v":1,"w":"5/3"}]})");
  const MatchGraph back = graph_from_json(text);
  EXPECT_EQ(graph_to_json(back), text);
  EXPECT_EQ(back.edges()[0].weight, make_rational(5, 3));
}

TEST(Io, GraphErrors) {
  EXPECT_THROW(graph_from_json(R"({"vertices":[{"id":0,"part":"red","x":0,"y":0}],"edges":[]})"),
               std::invalid_argument);
  EXPECT_THROW(
      graph_from_json(
          R"({"vertices":[{"id":0,"part":"black","x":0,"y":0},{"id":1,"part":"black","x":1,"y":0}],"edges":[{"u":0,"v":1}]})"),
      std::invalid_argument);
  EXPECT_THROW(
      graph_from_json(
          R"({"vertices":[{"id":0,"part":"black","x":0,"y":0},{"id":1,"part":"white","x":1,"y":0}],"edges":[{"u":0,"v":1,"w":"1/x"}]})"),
      std::invalid_argument);
}

TEST(Io, PatternRoundTrip) {
  const WeightPattern p{{1, make_rational(1, 2)}, {0, 3}};
  const std::string text = pattern_to_json(p);
  EXPECT_EQ(text, R"({"rows":2,"cols":2,"entries":[["1","1/2"],["0","3"]]})");
  EXPECT_EQ(pattern_from_json(text), p);
  EXPECT_EQ(pattern_from_json(R"({"rows":2,"cols":2,"entries":[[1,1],[1,"2/4"]]})")(1, 1),
            make_rational(1, 2));
}

TEST(Io, PatternErrors) {
  EXPECT_THROW(pattern_from_json(R"({"rows":2,"cols":2,"entries":[[1,1]]})"),
               std::invalid_argument);
  EXPECT_THROW(pattern_from_json(R"({"rows":1,"cols":2,"entries":[[1,1]]})"),
               std::invalid_argument);
}

}  // namespace
}  // namespace douglas
