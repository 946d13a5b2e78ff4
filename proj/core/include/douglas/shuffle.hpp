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

// Weighted Aztec diamond graphs and their reduction by urban renewal.
//
// The edge centres of AD_n form a 2n x 2n array. Rows are numbered from the
// northwest edge row downward and columns eastward; d-cell (i, j) owns the
// entries (2i..2i+1, 2j..2j+1), laid out as the block
//
//     [ top-left     top-right    ]
//     [ bottom-left  bottom-right ]
//
// A 2x2 block [[x, w], [y, z]] thus has cell-factor xz + yw.

#ifndef DOUGLAS_SHUFFLE_HPP_
#define DOUGLAS_SHUFFLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "douglas/match_graph.hpp"
#include "douglas/numeric.hpp"
#include "douglas/region.hpp"

namespace douglas {

// A dense matrix of exact rationals with even dimensions; used both for
// periodic seeds and for full 2n x 2n weight arrays.
class WeightPattern {
 public:
  WeightPattern() = default;
  // Throws std::invalid_argument for odd dimensions.
  WeightPattern(std::size_t rows, std::size_t cols, const Rational& fill = 0);
  WeightPattern(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  friend bool operator==(const WeightPattern&, const WeightPattern&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

using WeightMatrix = WeightPattern;

std::string to_string(const WeightPattern& pattern);
// FNV-1a over the canonical text form.
std::uint64_t pattern_hash(const WeightPattern& pattern);

enum class Code : std::uint8_t { kZero, kPlus, kMinus, kPlusMinus };
using EncodedSeq = std::vector<Code>;

// Over "0", "+", "-" and "±".
std::string to_string(const EncodedSeq& seq);
EncodedSeq parse_encoded(std::string_view text);

// One block per line of black cells, top to bottom: squares [[1,1],[1,1]],
// up triangles [[1,1],[1,0]], down triangles [[0,1],[1,1]].
WeightPattern characteristic_matrix(const Region& region);
WeightPattern characteristic_matrix(const RegionSpec& spec);

// Needs a 2q x 2 stack of binary blocks; throws NotBinaryBlock otherwise.
EncodedSeq encode(const WeightPattern& pattern);
WeightPattern decode(const EncodedSeq& seq);

// Zeros vacate their slots, every + moves one place up cyclically (a +
// landing on a - makes a ±), and the vacated slots refill with 0.
EncodedSeq sh(const EncodedSeq& seq);

// Each block [[x,w],[y,z]] replaced by [[z,y],[w,x]] / (xz + yw).
WeightPattern block_inverse(const WeightPattern& pattern);
// block_inverse followed by the cyclic shift of rows up and columns left.
WeightPattern d_transform(const WeightPattern& pattern);

// Weights of a d-cell's 4-cycle in cyclic order, starting top-left.
struct DCell {
  Rational x;  // top-left
  Rational y;  // top-right
  Rational z;  // bottom-right
  Rational t;  // bottom-left
};

Rational cell_factor(const DCell& cell);

class AztecGraph {
 public:
  // weights must be 2n x 2n.
  AztecGraph(int order, WeightMatrix weights);
  // Tiles the pattern periodically over the 2n x 2n array.
  static AztecGraph from_pattern(int order, const WeightPattern& pattern);

  int order() const { return order_; }
  const WeightMatrix& weights() const { return weights_; }
  DCell dcell(int i, int j) const;

  // Black vertices sit on the top and bottom of d-cells, white ones on
  // their left and right; positions have y growing northward.
  MatchGraph graph() const;

 private:
  int order_;
  WeightMatrix weights_;
};

struct ReductionStep {
  AztecGraph reduced;
  Rational factor;  // product of the cell-factors
};

// MGF(g) = factor * MGF(reduced). Throws SingularBlock on a zero factor.
ReductionStep reduction_step(const AztecGraph& graph);

struct ChainStep {
  int order = 0;  // of the graph being reduced
  Rational factor;
  std::uint64_t weights_hash = 0;
};

// Reduces down to AD_0 and returns the product of the factors, which is
// the matching generating function.
Rational reduction_chain(const AztecGraph& graph,
                         std::vector<ChainStep>* trace = nullptr);

// Row parts: 0 is the first row, n the last, and 1 <= k < n the rows
// (2k-1, 2k). Scaling one part by t scales the MGF by t^n.
AztecGraph scale_part(const AztecGraph& graph, int part, const Rational& t);

struct BinaryStep {
  WeightPattern pattern;  // decode(sh(encode(input)))
  int zeros = 0;          // 0 terms in encode(input)
};

BinaryStep binary_reduction_step(const WeightPattern& pattern);

struct ExponentReport {
  EncodedSeq code;
  std::vector<int> terms;  // t(1), ..., t(q)
  long closed_form = 0;
  long procedural = 0;
};

// Throws FormulaProcedureMismatch if the two routes disagree.
ExponentReport exponent_report(const RegionSpec& spec);
long exponent_S(const RegionSpec& spec);
BigCount shuffle_count(const RegionSpec& spec);

}  // namespace douglas

#endif  // DOUGLAS_SHUFFLE_HPP_
