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


// One PASS/FAIL line per acceptance criterion. Every comparison is exact.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "douglas/condensation.hpp"
#include "douglas/errors.hpp"
#include "douglas/match_graph.hpp"
#include "douglas/region.hpp"
#include "douglas/shuffle.hpp"
#include "oracles.hpp"

namespace douglas {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Unit-weight graphs seen by criteria 1-6, for the oracle comparison.
using Collector = std::vector<MatchGraph>;

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed2(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << v;
  return s.str();
}

std::string composition(const std::vector<int>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += (i ? "," : "") + std::to_string(d[i]);
  }
  return out + ")";
}

std::optional<Region> try_build(const RegionSpec& spec) {
  try {
    return build_region(spec);
  } catch (const SpecInvalid&) {
    return std::nullopt;
  }
}

MatchGraph keep(Collector* sink, MatchGraph g) {
  if (sink) sink->push_back(g);
  return g;
}

Outcome base_table_criterion(Collector* sink) {
  const Clock clock;
  const auto compositions = compositions_up_to(4);
  int valid = 0;
  int agree = 0;
  std::string invalid;
  for (const auto& d : compositions) {
    const int total = RegionSpec{1, d}.total_size();
    std::optional<Region> region;
    for (int a = 1; a <= total && !region; ++a) region = try_build({a, d});
    if (!region) {
      invalid += (invalid.empty() ? "" : " ") + composition(d);
      continue;
    }
    ++valid;
    const MatchGraph g = keep(sink, dual_graph(*region));
    if (count_matchings(g) == formula_count(*region)) ++agree;
  }
  const double t = clock.seconds();
  Outcome o;
  o.pass = valid == static_cast<int>(compositions.size()) && agree == valid && t < 1.0;
  o.detail = std::to_string(valid) + "/" + std::to_string(compositions.size()) +
             " compositions admit a valid region; counts agree on " +
             std::to_string(agree) + "/" + std::to_string(valid) +
             "; no valid a for " + invalid + "; " + fixed2(t) + " s";
  return o;
}

Outcome aztec_criterion(Collector* sink) {
  const Clock clock;
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const Region r = build_region({n, {2 * n}});
    const BigCount expected = pow2(n * (n + 1) / 2);
    bool ok = formula_count(r) == expected;
    if (n <= 4) {
      const MatchGraph g = keep(sink, dual_graph(r));
      ok = ok && count_matchings(g) == expected &&
           testing::brute_force_count(g) == expected;
    }
    o.pass = o.pass && ok;
    o.detail += "n=" + std::to_string(n) + ":" + to_string(formula_count(r)) +
                (ok ? " " : "(mismatch) ");
  }
  const double t = clock.seconds();
  o.pass = o.pass && t < 30.0;
  o.detail += fixed2(t) + " s";
  return o;
}

Outcome douglas_criterion(Collector* sink) {
  Outcome o;
  std::string literal;
  std::string corrected;
  for (int n = 1; n <= 3; ++n) {
    const BigCount expected = pow2(2 * n * (n + 1));
    // The stated mapping: k = 2n, d_1 = d_k = 1, interior 2, a = k.
    std::vector<int> d(2 * n, 2);
    d.front() = d.back() = 1;
    const RegionSpec stated{2 * n, d};
    try {
      const Region r = build_region(stated);
      bool ok = formula_count(r) == expected;
      if (n <= 2) ok = ok && count_matchings(keep(sink, dual_graph(r))) == expected;
      o.pass = o.pass && ok;
      literal += to_string(stated) + (ok ? " ok; " : " mismatch; ");
    } catch (const SpecInvalid& e) {
      o.pass = false;
      literal += to_string(stated) + " rejected (" +
                 std::string(reason_code(e.reason())) + "); ";
    }
    // The diamond with every second diagonal drawn has k = 2n + 1.
    std::vector<int> e(2 * n + 1, 2);
    e.front() = e.back() = 1;
    const RegionSpec actual{2 * n, e};
    const Region r = build_region(actual);
    bool ok = formula_count(r) == expected;
    if (n <= 2) ok = ok && count_matchings(keep(sink, dual_graph(r))) == expected;
    corrected += (corrected.empty() ? "" : " ") + to_string(actual) + "=" +
                 to_string(formula_count(r)) + (ok ? "" : "(mismatch)");
  }
  o.detail = "stated mapping: " + literal + "k=2n+1 family: " + corrected;
  return o;
}

Outcome families_criterion(Collector* sink) {
  Outcome o;
  CondensationEngine engine;
  int checked = 0;
  auto check = [&](const RegionSpec& spec, const BigCount& expected) {
    const Region r = build_region(spec);
    bool ok = formula_count(r) == expected && engine.count(spec) == expected &&
              shuffle_count(spec) == expected;
    ok = ok && count_matchings(keep(sink, dual_graph(r))) == expected;
    if (!ok) {
      o.pass = false;
      o.detail += to_string(spec) + " mismatch; ";
    }
    ++checked;
  };
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> d(k - 1, 1);
    d.push_back(2);
    check({1, d}, pow2(k));
  }
  for (int k = 2; k <= 6; ++k) {
    std::vector<int> d{3};
    d.insert(d.end(), k - 2, 1);
    d.push_back(2);
    check({2, d}, pow2(k + 2));
  }
  o.detail += std::to_string(checked) +
              " regions (A_1..A_6, E_2..E_6), brute/condense/shuffle/formula agree";
  return o;
}

Outcome sweep_criterion(Collector* sink) {
  const Clock clock;
  Outcome o;
  CondensationEngine engine;
  int checked = 0;
  for (const RegionSpec& spec : valid_specs_up_to(8)) {
    const Region r = build_region(spec);
    const BigCount formula = pow2(formula_exponent(structural_stats(r)));
    const BigCount dual = count_matchings(keep(sink, dual_graph(r)));
    if (dual != formula || engine.count(spec) != formula ||
        shuffle_count(spec) != formula) {
      o.pass = false;
      o.detail += to_string(spec) + " mismatch; ";
    }
    ++checked;
  }
  const double t = clock.seconds();
  o.pass = o.pass && checked > 0 && t < 300.0;
  o.detail += std::to_string(checked) + " valid specs, four engines equal; " +
              fixed2(t) + " s";
  return o;
}

Outcome kuo_criterion(Collector* sink) {
  Outcome o;
  int regions = 0;
  int fixtures = 0;
  auto collect = [&](const MatchGraph& g, const CornerQuad& q) {
    if (!sink) return;
    for (const std::vector<std::size_t>& removed :
         {std::vector<std::size_t>{}, {q.x, q.y, q.z, q.t}, {q.x, q.y}, {q.z, q.t},
          {q.t, q.x}, {q.y, q.z}}) {
      sink->push_back(g.without(removed));
    }
  };
  for (const RegionSpec& spec : valid_specs_up_to(8)) {
    const MatchGraph g = dual_graph(build_region(spec));
    const CornerQuad q = pick_corners(g);
    collect(g, q);
    if (kuo_counts(g, q).holds()) {
      ++regions;
    } else {
      o.pass = false;
      o.detail += to_string(spec) + " fails; ";
    }
  }
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> side(1, 3);
  for (int i = 0; i < 50; ++i) {
    const auto f = testing::random_grid(rng, 2 * side(rng), 2 * side(rng));
    collect(f.graph, f.corners);
    if (kuo_counts(f.graph, f.corners).holds()) {
      ++fixtures;
    } else {
      o.pass = false;
      o.detail += "fixture " + std::to_string(i) + " fails; ";
    }
  }
  o.detail += std::to_string(regions) + " region duals and " +
              std::to_string(fixtures) + "/50 grid fixtures satisfy the identity";
  return o;
}

WeightPattern random_pattern(std::mt19937_64& rng, std::size_t rows,
                             std::size_t cols) {
  WeightPattern p(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) p(r, c) = testing::random_rational(rng);
  }
  return p;
}

Outcome reduction_criterion() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<int> order(1, 3);
  int held = 0;
  for (int i = 0; i < 100; ++i) {
    const WeightPattern a = random_pattern(rng, 2 * dim(rng), 2 * dim(rng));
    const AztecGraph g = AztecGraph::from_pattern(order(rng), a);
    const ReductionStep step = reduction_step(g);
    const AztecGraph shifted = AztecGraph::from_pattern(g.order() - 1, d_transform(a));
    const Rational lhs = matching_generating_function(g.graph());
    const Rational rhs = step.factor * matching_generating_function(shifted.graph());
    if (lhs == rhs && step.reduced.weights() == shifted.weights()) {
      ++held;
    } else {
      o.pass = false;
    }
  }
  o.detail = std::to_string(held) + "/100 random rational patterns";
  return o;
}

Outcome scaling_criterion() {
  Outcome o;
  std::mt19937_64 rng(44);
  int held = 0;
  int total = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int round = 0; round < 5; ++round) {
      const AztecGraph g = AztecGraph::from_pattern(n, random_pattern(rng, 2 * n, 2 * n));
      const Rational base = matching_generating_function(g.graph());
      for (int part = 0; part <= n; ++part) {
        const Rational t = testing::random_rational(rng);
        const Rational scaled =
            matching_generating_function(scale_part(g, part, t).graph());
        ++total;
        if (scaled == pow(t, static_cast<unsigned>(n)) * base) {
          ++held;
        } else {
          o.pass = false;
        }
      }
    }
  }
  o.detail = std::to_string(held) + "/" + std::to_string(total) +
             " row-part scalings (n = 1..3, every part)";
  return o;
}

Outcome exponent_criterion() {
  Outcome o;
  int identity = 0;
  std::vector<RegionSpec> eligible;
  for (const RegionSpec& spec : valid_specs_up_to(12)) {
    const RegionStats s = structural_stats(build_region(spec));
    if (exponent_S(spec) == formula_exponent(s)) {
      ++identity;
    } else {
      o.pass = false;
    }
    if (spec.d.size() >= 2) eligible.push_back(spec);
  }
  const int all = static_cast<int>(valid_specs_up_to(12).size());

  std::mt19937_64 rng(99);
  std::shuffle(eligible.begin(), eligible.end(), rng);
  int even = 0, even_held = 0, odd = 0, odd_held = 0, odd_plus_one = 0;
  for (const RegionSpec& spec : eligible) {
    if (even + odd == 50) break;
    const int d1 = spec.d[0];
    const int x = d1 / 2;
    const bool is_even = d1 % 2 == 0;
    RegionSpec other{spec.a + (is_even ? -1 : 1),
                     {d1 + spec.d[1] + (is_even ? -1 : 1)}};
    other.d.insert(other.d.end(), spec.d.begin() + 2, spec.d.end());
    if (!try_build(other)) continue;
    const long s = exponent_S(spec);
    const long t = exponent_S(other);
    if (is_even) {
      ++even;
      even_held += t == s - x ? 1 : 0;
    } else {
      ++odd;
      odd_held += t == s + x ? 1 : 0;
      odd_plus_one += t == s + x + 1 ? 1 : 0;
    }
  }
  o.pass = o.pass && identity == all && even_held == even && odd_held == odd &&
           even + odd == 50;
  o.detail = "S = C - w(w+1)/2 on " + std::to_string(identity) + "/" +
             std::to_string(all) + " specs; S' = S - x on " +
             std::to_string(even_held) + "/" + std::to_string(even) +
             " even d_1; S'' = S + x on " + std::to_string(odd_held) + "/" +
             std::to_string(odd) + " odd d_1 (S'' = S + x + 1 on " +
             std::to_string(odd_plus_one) + "/" + std::to_string(odd) + ")";
  return o;
}

Outcome oracle_criterion() {
  Collector graphs;
  base_table_criterion(&graphs);
  aztec_criterion(&graphs);
  douglas_criterion(&graphs);
  families_criterion(&graphs);
  sweep_criterion(&graphs);
  kuo_criterion(&graphs);
  Outcome o;
  int compared = 0;
  for (const MatchGraph& g : graphs) {
    if (g.count(Part::kBlack) > 14 || g.count(Part::kWhite) > 14) continue;
    ++compared;
    if (Rational(count_matchings(g)) != permanent_oracle(g)) o.pass = false;
  }
  o.pass = o.pass && compared > 0;
  o.detail = std::to_string(compared) + " of " + std::to_string(graphs.size()) +
             " graphs have at most 14 vertices per side; all match";
  if (!o.pass) o.detail = "mismatch among " + std::to_string(compared) + " graphs";
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace douglas

int main(int argc, char** argv) {
  using namespace douglas;
  CLI::App app("acceptance criteria");
  int only = 0;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {"base-case table", [] { return base_table_criterion(nullptr); }},
      {"Aztec family", [] { return aztec_criterion(nullptr); }},
      {"Douglas family", [] { return douglas_criterion(nullptr); }},
      {"A_k and E_k families", [] { return families_criterion(nullptr); }},
      {"engine sweep", [] { return sweep_criterion(nullptr); }},
      {"Kuo identity", [] { return kuo_criterion(nullptr); }},
      {"reduction step", reduction_criterion},
      {"row-part scaling", scaling_criterion},
      {"exponent identity", exponent_criterion},
      {"oracle equivalence", oracle_criterion},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1 < 10 ? "c0" : "c")
              << i + 1 << ' ' << criteria[i].title << ": " << o.detail << '\n';
  }
  return all ? 0 : 1;
}
