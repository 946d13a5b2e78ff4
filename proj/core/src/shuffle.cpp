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

#include "douglas/shuffle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "douglas/errors.hpp"

namespace douglas {
namespace {

constexpr std::string_view kPlusMinus = "\xC2\xB1";  // UTF-8 "±"

bool has_plus(Code c) { return c == Code::kPlus || c == Code::kPlusMinus; }
bool has_minus(Code c) { return c == Code::kMinus || c == Code::kPlusMinus; }

Code combine(bool plus, bool minus) {
  if (plus && minus) return Code::kPlusMinus;
  if (plus) return Code::kPlus;
  if (minus) return Code::kMinus;
  return Code::kZero;
}

// Entries of a block: {x, w, y, z} for [[x, w], [y, z]].
std::array<int, 4> block_shape(Code code) {
  switch (code) {
    case Code::kZero: return {1, 1, 1, 1};
    case Code::kPlus: return {1, 1, 1, 0};
    case Code::kMinus: return {0, 1, 1, 1};
    case Code::kPlusMinus: return {0, 1, 1, 0};
  }
  return {};
}

void put_block(WeightPattern& m, std::size_t block, Code code) {
  auto s = block_shape(code);
  m(2 * block, 0) = s[0];
  m(2 * block, 1) = s[1];
  m(2 * block + 1, 0) = s[2];
  m(2 * block + 1, 1) = s[3];
}

}  // namespace

WeightPattern::WeightPattern(std::size_t rows, std::size_t cols,
                             const Rational& fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  if (rows % 2 != 0 || cols % 2 != 0) {
    throw std::invalid_argument("weight pattern dimensions must be even");
  }
}

WeightPattern::WeightPattern(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged weight pattern");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (rows_ % 2 != 0 || cols_ % 2 != 0) {
    throw std::invalid_argument("weight pattern dimensions must be even");
  }
}

std::string to_string(const WeightPattern& pattern) {
  std::string out;
  for (std::size_t r = 0; r < pattern.rows(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < pattern.cols(); ++c) {
      if (c) out += ',';
      out += to_string(pattern(r, c));
    }
  }
  return out;
}

std::uint64_t pattern_hash(const WeightPattern& pattern) {
  std::uint64_t h = 1469598103934665603ULL;
  const std::string text = std::to_string(pattern.rows()) + "x" +
                           std::to_string(pattern.cols()) + ":" +
                           to_string(pattern);
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_string(const EncodedSeq& seq) {
  std::string out;
  for (Code c : seq) {
    switch (c) {
      case Code::kZero: out += '0'; break;
      case Code::kPlus: out += '+'; break;
      case Code::kMinus: out += '-'; break;
      case Code::kPlusMinus: out += kPlusMinus; break;
    }
  }
  return out;
}

EncodedSeq parse_encoded(std::string_view text) {
  EncodedSeq out;
  while (!text.empty()) {
    if (text.substr(0, kPlusMinus.size()) == kPlusMinus) {
      out.push_back(Code::kPlusMinus);
      text.remove_prefix(kPlusMinus.size());
      continue;
    }
    switch (text.front()) {
      case '0': out.push_back(Code::kZero); break;
      case '+': out.push_back(Code::kPlus); break;
      case '-': out.push_back(Code::kMinus); break;
      default:
        throw std::invalid_argument("unexpected symbol in encoded sequence");
    }
    text.remove_prefix(1);
  }
  return out;
}

WeightPattern characteristic_matrix(const Region& region) {
  std::vector<Code> blocks;
  for (const CellLine& line : region.lines()) {
    if (line.color != Color::kBlack) continue;
    switch (line.kind) {
      case CellKind::kSquare: blocks.push_back(Code::kZero); break;
      case CellKind::kTriangleUp: blocks.push_back(Code::kPlus); break;
      case CellKind::kTriangleDown: blocks.push_back(Code::kMinus); break;
    }
  }
  return decode(blocks);
}

WeightPattern characteristic_matrix(const RegionSpec& spec) {
  return characteristic_matrix(build_region(spec));
}

EncodedSeq encode(const WeightPattern& pattern) {
  if (pattern.cols() != 2) {
    throw std::invalid_argument("encoded sequences need a 2-column stack");
  }
  EncodedSeq out;
  for (std::size_t b = 0; 2 * b < pattern.rows(); ++b) {
    const std::array<Rational, 4> e = {pattern(2 * b, 0), pattern(2 * b, 1),
                                       pattern(2 * b + 1, 0),
                                       pattern(2 * b + 1, 1)};
    std::optional<Code> found;
    for (Code c : {Code::kZero, Code::kPlus, Code::kMinus, Code::kPlusMinus}) {
      auto s = block_shape(c);
      if (e[0] == s[0] && e[1] == s[1] && e[2] == s[2] && e[3] == s[3]) {
        found = c;
      }
    }
    if (!found) {
      throw NotBinaryBlock(b, "[[" + to_string(e[0]) + "," + to_string(e[1]) +
                                  "],[" + to_string(e[2]) + "," +
                                  to_string(e[3]) + "]]");
    }
    out.push_back(*found);
  }
  return out;
}

WeightPattern decode(const EncodedSeq& seq) {
  WeightPattern m(2 * seq.size(), 2);
  for (std::size_t b = 0; b < seq.size(); ++b) put_block(m, b, seq[b]);
  return m;
}

EncodedSeq sh(const EncodedSeq& seq) {
  const std::size_t q = seq.size();
  // Stage 1: zeros leave open slots.
  std::vector<std::optional<Code>> slots(q);
  for (std::size_t i = 0; i < q; ++i) {
    if (seq[i] != Code::kZero) slots[i] = seq[i];
  }
  // Stage 2: every + moves one slot up, wrapping from the top to the bottom;
  // the - halves stay put.
  std::vector<bool> plus(q, false);
  std::vector<bool> minus(q, false);
  for (std::size_t i = 0; i < q; ++i) {
    if (!slots[i]) continue;
    if (has_plus(*slots[i])) plus[(i + q - 1) % q] = true;
    if (has_minus(*slots[i])) minus[i] = true;
  }
  // Stage 3: whatever is left empty becomes 0.
  EncodedSeq out(q);
  for (std::size_t i = 0; i < q; ++i) out[i] = combine(plus[i], minus[i]);
  return out;
}

WeightPattern block_inverse(const WeightPattern& pattern) {
  WeightPattern out(pattern.rows(), pattern.cols());
  for (std::size_t r = 0; r < pattern.rows(); r += 2) {
    for (std::size_t c = 0; c < pattern.cols(); c += 2) {
      const Rational& x = pattern(r, c);
      const Rational& w = pattern(r, c + 1);
      const Rational& y = pattern(r + 1, c);
      const Rational& z = pattern(r + 1, c + 1);
      const Rational delta = x * z + y * w;
      if (delta == 0) throw SingularBlock(r / 2, c / 2);
      out(r, c) = z / delta;
      out(r, c + 1) = y / delta;
      out(r + 1, c) = w / delta;
      out(r + 1, c + 1) = x / delta;
    }
  }
  return out;
}

WeightPattern d_transform(const WeightPattern& pattern) {
  const WeightPattern inverse = block_inverse(pattern);
  const std::size_t rows = pattern.rows();
  const std::size_t cols = pattern.cols();
  WeightPattern out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = inverse((r + 1) % rows, (c + 1) % cols);
    }
  }
  return out;
}

Rational cell_factor(const DCell& cell) {
  return cell.x * cell.z + cell.y * cell.t;
}

AztecGraph::AztecGraph(int order, WeightMatrix weights)
    : order_(order), weights_(std::move(weights)) {
  if (order < 0) throw std::invalid_argument("negative Aztec order");
  const auto side = static_cast<std::size_t>(2 * order);
  if (weights_.rows() != side || weights_.cols() != side) {
    throw std::invalid_argument("weight matrix must be 2n x 2n");
  }
}

AztecGraph AztecGraph::from_pattern(int order, const WeightPattern& pattern) {
  if (order < 0) throw std::invalid_argument("negative Aztec order");
  const auto side = static_cast<std::size_t>(2 * order);
  if (side > 0 && (pattern.rows() == 0 || pattern.cols() == 0)) {
    throw std::invalid_argument("empty weight pattern");
  }
  WeightMatrix m(side, side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      m(r, c) = pattern(r % pattern.rows(), c % pattern.cols());
    }
  }
  return AztecGraph(order, std::move(m));
}

DCell AztecGraph::dcell(int i, int j) const {
  const auto r = static_cast<std::size_t>(2 * i);
  const auto c = static_cast<std::size_t>(2 * j);
  return {weights_(r, c), weights_(r, c + 1), weights_(r + 1, c + 1),
          weights_(r + 1, c)};
}

MatchGraph AztecGraph::graph() const {
  MatchGraph g;
  std::map<std::pair<int, int>, std::size_t> index;
  auto vertex = [&](int x, int y_down) {
    auto [it, fresh] = index.try_emplace({x, y_down}, 0);
    if (fresh) {
      // Top/bottom vertices have odd x.
      Part part = x % 2 != 0 ? Part::kBlack : Part::kWhite;
      it->second = g.add_vertex(part, {x, -y_down});
    }
    return it->second;
  };
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      const std::size_t top = vertex(2 * j + 1, 2 * i);
      const std::size_t bottom = vertex(2 * j + 1, 2 * i + 2);
      const std::size_t left = vertex(2 * j, 2 * i + 1);
      const std::size_t right = vertex(2 * j + 2, 2 * i + 1);
      const DCell w = dcell(i, j);
      g.add_edge(top, left, w.x);
      g.add_edge(top, right, w.y);
      g.add_edge(bottom, right, w.z);
      g.add_edge(bottom, left, w.t);
    }
  }
  return g;
}

ReductionStep reduction_step(const AztecGraph& graph) {
  const int n = graph.order();
  if (n == 0) throw std::invalid_argument("AD_0 has nothing to reduce");
  Rational factor(1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational f = cell_factor(graph.dcell(i, j));
      if (f == 0) {
        throw SingularBlock(static_cast<std::size_t>(i),
                            static_cast<std::size_t>(j));
      }
      factor *= f;
    }
  }
  const WeightMatrix inverse = block_inverse(graph.weights());
  const auto side = static_cast<std::size_t>(2 * (n - 1));
  WeightMatrix next(side, side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) next(r, c) = inverse(r + 1, c + 1);
  }
  return {AztecGraph(n - 1, std::move(next)), factor};
}

Rational reduction_chain(const AztecGraph& graph,
                         std::vector<ChainStep>* trace) {
  Rational product(1);
  AztecGraph current = graph;
  while (current.order() > 0) {
    ReductionStep step = reduction_step(current);
    if (trace) {
      trace->push_back(
          {current.order(), step.factor, pattern_hash(current.weights())});
    }
    product *= step.factor;
    current = std::move(step.reduced);
  }
  return product;
}

AztecGraph scale_part(const AztecGraph& graph, int part, const Rational& t) {
  const int n = graph.order();
  if (part < 0 || part > n) throw std::out_of_range("row part out of range");
  if (t <= 0) throw std::invalid_argument("scale must be positive");
  std::vector<std::size_t> rows;
  if (part == 0) {
    rows = {0};
  } else if (part == n) {
    rows = {static_cast<std::size_t>(2 * n - 1)};
  } else {
    rows = {static_cast<std::size_t>(2 * part - 1),
            static_cast<std::size_t>(2 * part)};
  }
  WeightMatrix m = graph.weights();
  for (std::size_t r : rows) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= t;
  }
  return AztecGraph(n, std::move(m));
}

BinaryStep binary_reduction_step(const WeightPattern& pattern) {
  const EncodedSeq code = encode(pattern);
  BinaryStep out;
  out.zeros = static_cast<int>(std::count(code.begin(), code.end(), Code::kZero));
  out.pattern = decode(sh(code));
  return out;
}

ExponentReport exponent_report(const RegionSpec& spec) {
  ExponentReport report;
  report.code = encode(characteristic_matrix(spec));
  const auto& code = report.code;
  const int q = static_cast<int>(code.size());
  if (std::any_of(code.begin(), code.end(),
                  [](Code c) { return c == Code::kPlusMinus; })) {
    throw std::logic_error("characteristic matrix produced a ± block");
  }

  // Closed form: t(i) = 0 on a -, otherwise q - i + 1 - g(i) where g(i)
  // counts the + terms at positions i..q.
  std::vector<int> plus_from(q + 2, 0);
  for (int i = q; i >= 1; --i) {
    plus_from[i] = plus_from[i + 1] + (code[i - 1] == Code::kPlus ? 1 : 0);
  }
  for (int i = 1; i <= q; ++i) {
    const int t =
        code[i - 1] == Code::kMinus ? 0 : q - i + 1 - plus_from[i];
    report.terms.push_back(t);
    report.closed_form += t;
  }

  // Procedure: zeros in the first q - j terms of the j-th iterate of sh.
  EncodedSeq alpha = code;
  for (int j = 0; j < q; ++j) {
    report.procedural += std::count(alpha.begin(), alpha.begin() + (q - j),
                                    Code::kZero);
    alpha = sh(alpha);
  }

  if (report.closed_form != report.procedural) {
    std::ostringstream msg;
    msg << to_string(spec) << ": closed form " << report.closed_form
        << " vs iterated shifts " << report.procedural << " for code "
        << to_string(code);
    throw FormulaProcedureMismatch(msg.str());
  }
  return report;
}

long exponent_S(const RegionSpec& spec) {
  return exponent_report(spec).closed_form;
}

BigCount shuffle_count(const RegionSpec& spec) {
  return pow2(static_cast<std::uint64_t>(exponent_S(spec)));
}

}  // namespace douglas
