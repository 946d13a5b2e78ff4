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

#include "douglas/condensation.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "douglas/errors.hpp"

namespace douglas {
namespace {

int level_of(const GraphVertex& v) { return v.position.y - v.position.x; }

std::vector<int> ones(int count) {
  return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), 1);
}

std::vector<int> concat(std::vector<int> head, const std::vector<int>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

// d[first..last] with 1-based inclusive bounds; empty when first > last.
std::vector<int> slice(const std::vector<int>& d, int first, int last) {
  if (first > last) return {};
  return std::vector<int>(d.begin() + (first - 1), d.begin() + last);
}

SubSpec make_sub(int a, std::vector<int> d) {
  int total = 0;
  for (int v : d) total += v;
  if (a == 0 && total == 0) return std::nullopt;
  if (a < 1 || d.empty() ||
      std::any_of(d.begin(), d.end(), [](int v) { return v < 1; })) {
    throw CaseUnreachable("recurrence produced a degenerate sub-region");
  }
  return RegionSpec{a, std::move(d)};
}

std::optional<int> first_long_index(const std::vector<int>& d) {
  for (int i = 2; i <= static_cast<int>(d.size()); ++i) {
    if (d[i - 1] >= 2) return i;
  }
  return std::nullopt;
}

std::optional<int> last_long_index(const std::vector<int>& d) {
  for (int i = static_cast<int>(d.size()) - 1; i >= 1; --i) {
    if (d[i - 1] >= 2) return i;
  }
  return std::nullopt;
}

// Sub-regions shared by Case I and the Case II forms that borrow them.
void fill_i3(CaseRecurrence& r) {
  const auto& d = r.oriented.d;
  const int a = r.oriented.a;
  const int k = static_cast<int>(d.size());
  auto tail = slice(d, 1, k - 1);
  tail.push_back(d.back() - 2);
  auto inner = slice(d, 2, k - 1);
  inner.push_back(d.back() - 2);
  r.subs = {make_sub(a, slice(d, 2, k)), make_sub(a - 1, tail),
            make_sub(a - 1, inner)};
}

void fill_i5(CaseRecurrence& r) {
  const auto& d = r.oriented.d;
  const int a = r.oriented.a;
  const int k = static_cast<int>(d.size());
  r.subs = {make_sub(a, slice(d, 2, k)), make_sub(a - 1, slice(d, 1, k - 1)),
            make_sub(a - 1, slice(d, 2, k - 1))};
}

void fill_i6(CaseRecurrence& r) {
  const auto& d = r.oriented.d;
  const int a = r.oriented.a;
  const int k = static_cast<int>(d.size());
  r.last_long = last_long_index(d);
  if (!r.last_long) throw CaseUnreachable("no interior entry >= 2");
  const int q = *r.last_long;
  auto head = slice(d, 1, q - 1);
  head.push_back(d[q - 1] - 1);
  auto inner = slice(d, 2, q - 1);
  inner.push_back(d[q - 1] - 1);
  r.subs = {make_sub(a, slice(d, 2, k)), make_sub(a - 1, head),
            make_sub(a - 1, inner)};
}

void fill_i1(CaseRecurrence& r) {
  const auto& d = r.oriented.d;
  const int a = r.oriented.a;
  const int k = static_cast<int>(d.size());
  if (k == 1) {
    // Aztec diamond: both end decrements fall on the single entry.
    r.subs = {make_sub(a - 1, {d[0] - 2}), make_sub(a - 1, {d[0] - 2}),
              make_sub(a - 2, {d[0] - 4})};
    return;
  }
  auto g1 = d;
  g1.front() -= 2;
  auto g2 = d;
  g2.back() -= 2;
  auto g3 = d;
  g3.front() -= 2;
  g3.back() -= 2;
  r.subs = {make_sub(a - 1, g1), make_sub(a - 1, g2), make_sub(a - 2, g3)};
}

void fill_i2(CaseRecurrence& r) {
  const auto& d = r.oriented.d;
  const int a = r.oriented.a;
  const int k = static_cast<int>(d.size());
  r.first_long = first_long_index(d);
  if (!r.first_long) throw CaseUnreachable("no entry >= 2 after the first");
  const int m = *r.first_long;
  auto g1 = slice(d, m, k);
  g1.front() -= 1;
  auto g2 = d;
  g2.back() -= 2;
  auto g3 = g1;
  g3.back() -= 2;  // merges with the first decrement when m == k
  r.subs = {make_sub(a - m, g1), make_sub(a - 1, g2), make_sub(a - m - 1, g3)};
}

void fill_i4(CaseRecurrence& r) {
  const auto& d = r.oriented.d;
  const int a = r.oriented.a;
  const int k = static_cast<int>(d.size());
  r.first_long = first_long_index(d);
  r.last_long = last_long_index(d);
  if (!r.first_long || !r.last_long) {
    throw CaseUnreachable("Case I.4 index rule has no solution");
  }
  const int m = *r.first_long;
  const int q = *r.last_long;
  if (m > q) throw CaseUnreachable("Case I.4 with m > q");
  auto g1 = slice(d, m, k);
  g1.front() -= 1;
  auto g2 = slice(d, 1, q);
  g2.back() -= 1;
  std::vector<int> g3;
  if (m < q) {
    g3 = slice(d, m, q);
    g3.front() -= 1;
    g3.back() -= 1;
  } else {
    g3 = {d[m - 1] - 2};
    if (g3.front() == 0) g3.clear();
  }
  r.subs = {make_sub(a - m, g1), make_sub(a - 1, g2), make_sub(a - m - 1, g3)};
}

bool all_ones(const std::vector<int>& d, int first, int last) {
  for (int i = first; i <= last; ++i) {
    if (d[i - 1] != 1) return false;
  }
  return true;
}

CaseRecurrence case_two(RegionSpec spec) {
  CaseRecurrence r;
  const int width = spec.total_size() - spec.a;
  if (spec.a > width) {
    spec = flipped(spec);
    r.flipped = true;
  }
  r.oriented = spec;
  const auto& d = spec.d;
  const int k = static_cast<int>(d.size());
  if (spec.a == 1) {
    if (d.back() != 2 || !all_ones(d, 1, k - 1)) {
      throw CaseUnreachable(to_string(spec) + " is not of the A_k form");
    }
    r.id = CaseId::kII1;
    r.identity = IdentityForm::kDoubling;
    r.subs = {make_sub(1, concat(ones(k - 2), {2}))};
    return r;
  }
  if (spec.a != 2) throw CaseUnreachable(to_string(spec) + " in Case II");

  if (k >= 2 && d[k - 1] == 1 && d[k - 2] == 2 && all_ones(d, 1, k - 2)) {
    r.id = CaseId::kII2a;
    fill_i5(r);
    return r;
  }
  if (d.back() == 4 && all_ones(d, 1, k - 1)) {
    r.id = CaseId::kII2bi;
    fill_i3(r);
    return r;
  }
  if (k >= 2 && d.front() == 3 && d.back() == 2 && all_ones(d, 2, k - 1)) {
    r.id = CaseId::kII2biii;
    r.identity = IdentityForm::kQuadrupling;
    r.subs = {make_sub(1, concat(ones(k - 1), {2}))};
    return r;
  }
  if (k >= 3 && d.back() == 2) {
    for (int i = 2; i < k; ++i) {
      if (d[i - 1] == 3 && all_ones(d, 1, i - 1) && all_ones(d, i + 1, k - 1)) {
        r.id = CaseId::kII2bii;
        fill_i6(r);
        return r;
      }
    }
  }
  throw CaseUnreachable(to_string(spec) + " matches no Case II form");
}

CaseRecurrence case_one(RegionSpec spec) {
  CaseRecurrence r;
  if (spec.d.front() > spec.d.back()) {
    spec = flipped(spec);
    r.flipped = true;
  }
  r.oriented = spec;
  const int first = spec.d.front();
  const int last = spec.d.back();
  if (first >= 3 && last >= 3) {
    r.id = CaseId::kI1;
    fill_i1(r);
  } else if (first == 2 && last >= 3) {
    r.id = CaseId::kI2;
    fill_i2(r);
  } else if (first == 1 && last >= 3) {
    r.id = CaseId::kI3;
    fill_i3(r);
  } else if (first == 2 && last == 2) {
    r.id = CaseId::kI4;
    fill_i4(r);
  } else if (first == 1 && last == 1) {
    r.id = CaseId::kI5;
    fill_i5(r);
  } else if (first == 1 && last == 2) {
    r.id = CaseId::kI6;
    fill_i6(r);
  } else {
    throw CaseUnreachable(to_string(spec) + " fits no Case I branch");
  }
  return r;
}

}  // namespace

CornerQuad pick_corners(const MatchGraph& graph) {
  std::optional<std::size_t> x, y, z, t;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const GraphVertex& gv = graph.vertices()[v];
    const int level = level_of(gv);
    const int px = gv.position.x;
    auto better = [&](const std::optional<std::size_t>& cur, bool higher,
                      bool prefer_west) {
      if (!cur) return true;
      const GraphVertex& c = graph.vertices()[*cur];
      const int cl = level_of(c);
      if (level != cl) return higher ? level > cl : level < cl;
      return prefer_west ? px < c.position.x : px > c.position.x;
    };
    if (gv.part == Part::kBlack) {
      if (better(x, true, true)) x = v;
      if (better(z, false, false)) z = v;
    } else {
      if (better(t, true, false)) t = v;
      if (better(y, false, true)) y = v;
    }
  }
  if (!x || !y || !z || !t) {
    throw CornersNotFound("graph lacks vertices of one colour");
  }
  if (*x == *z || *y == *t) {
    throw CornersNotFound("corner extremes coincide");
  }
  return {*x, *y, *z, *t};
}

KuoCounts kuo_counts(const MatchGraph& graph, const CornerQuad& q,
                     const CountOptions& options) {
  const auto& vs = graph.vertices();
  if (vs.at(q.x).part != Part::kBlack || vs.at(q.z).part != Part::kBlack ||
      vs.at(q.y).part != Part::kWhite || vs.at(q.t).part != Part::kWhite) {
    throw std::invalid_argument("corner colours do not alternate");
  }
  auto m = [&](std::vector<std::size_t> removed) {
    return count_matchings(graph.without(removed), options);
  };
  KuoCounts k;
  k.whole = m({});
  k.without_all = m({q.x, q.y, q.z, q.t});
  k.without_xy = m({q.x, q.y});
  k.without_zt = m({q.z, q.t});
  k.without_tx = m({q.t, q.x});
  k.without_yz = m({q.y, q.z});
  return k;
}

bool verify_kuo(const MatchGraph& graph, const CornerQuad& quad,
                const CountOptions& options) {
  return kuo_counts(graph, quad, options).holds();
}

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::kI1: return "I.1";
    case CaseId::kI2: return "I.2";
    case CaseId::kI3: return "I.3";
    case CaseId::kI4: return "I.4";
    case CaseId::kI5: return "I.5";
    case CaseId::kI6: return "I.6";
    case CaseId::kII1: return "II.1";
    case CaseId::kII2a: return "II.2a";
    case CaseId::kII2bi: return "II.2b(i)";
    case CaseId::kII2bii: return "II.2b(ii)";
    case CaseId::kII2biii: return "II.2b(iii)";
  }
  return "?";
}

bool is_case_one(CaseId id) {
  switch (id) {
    case CaseId::kI1:
    case CaseId::kI2:
    case CaseId::kI3:
    case CaseId::kI4:
    case CaseId::kI5:
    case CaseId::kI6:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(IdentityForm form) {
  switch (form) {
    case IdentityForm::kCondensation: return "M*M3 = 2*M1*M2";
    case IdentityForm::kDoubling: return "M = 2*M1";
    case IdentityForm::kQuadrupling: return "M = 4*M1";
  }
  return "?";
}

CaseRecurrence case_recurrence(const RegionSpec& spec) {
  const int total = spec.total_size();
  if (total <= 4) {
    throw BaseCase(to_string(spec) + " is resolved by the base table");
  }
  const int width = total - spec.a;
  if (std::min(spec.a, width) < 3) return case_two(spec);
  return case_one(spec);
}

RegionSpec canonical_spec(const RegionSpec& spec) {
  return std::min(spec, flipped(spec));
}

const std::vector<std::pair<RegionSpec, BigCount>>& base_table() {
  static const std::vector<std::pair<RegionSpec, BigCount>> table = {
      {{1, {2}}, 2},          {{1, {1, 2}}, 4},       {{2, {2, 1}}, 4},
      {{1, {1, 1, 2}}, 8},    {{2, {1, 2, 1}}, 16},   {{3, {2, 1, 1}}, 8},
      {{2, {4}}, 8},
  };
  return table;
}

std::optional<BigCount> CondensationEngine::lookup(const RegionSpec& key) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void CondensationEngine::seed(const RegionSpec& spec, const BigCount& value) {
  std::unique_lock lock(mutex_);
  memo_.emplace(canonical_spec(spec), value);
}

std::size_t CondensationEngine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::vector<std::pair<RegionSpec, BigCount>> CondensationEngine::memo_snapshot()
    const {
  std::shared_lock lock(mutex_);
  return {memo_.begin(), memo_.end()};
}

BigCount CondensationEngine::count(const RegionSpec& spec) {
  build_region(spec);  // rejects invalid specs with the builder's reason
  return solve(spec);
}

BigCount CondensationEngine::solve(const RegionSpec& spec) {
  const RegionSpec key = canonical_spec(spec);
  if (auto hit = lookup(key)) return *hit;

  BigCount value;
  if (spec.total_size() <= 4) {
    const auto& table = base_table();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& row) {
      return canonical_spec(row.first) == key;
    });
    if (it == table.end()) {
      throw CaseUnreachable(to_string(spec) + " is not in the base table");
    }
    value = it->second;
  } else {
    const CaseRecurrence rec = case_recurrence(spec);
    std::vector<BigCount> parts;
    for (const SubSpec& sub : rec.subs) {
      if (!sub) {
        parts.emplace_back(1);
        continue;
      }
      if (compatible_side(sub->d) != sub->a) {
        throw CaseUnreachable("sub-region " + to_string(*sub) + " is invalid");
      }
      parts.push_back(solve(*sub));
    }
    switch (rec.identity) {
      case IdentityForm::kDoubling:
        value = 2 * parts.at(0);
        break;
      case IdentityForm::kQuadrupling:
        value = 4 * parts.at(0);
        break;
      case IdentityForm::kCondensation: {
        const BigCount numerator = 2 * parts.at(0) * parts.at(1);
        const BigCount& denominator = parts.at(2);
        if (denominator == 0 || numerator % denominator != 0) {
          throw DivisionInexact(to_string(spec) + " in case " +
                                std::string(to_string(rec.id)) + ": " +
                                to_string(numerator) + " / " +
                                to_string(denominator));
        }
        value = numerator / denominator;
        break;
      }
    }
  }

  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.emplace(key, value);
  if (!inserted && it->second != value) {
    throw std::logic_error("memo disagreement at " + to_string(key));
  }
  return it->second;
}

BigCount condensation_count(const RegionSpec& spec) {
  CondensationEngine engine;
  return engine.count(spec);
}

bool StatsDeltas::all_hold() const {
  return balance_holds() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const DeltaCheck& c) { return c.holds(); });
}

StatsDeltas stats_deltas(const RegionSpec& spec) {
  StatsDeltas out;
  out.recurrence = case_recurrence(spec);
  if (!is_case_one(out.recurrence.id)) {
    throw std::invalid_argument(to_string(spec) + " is not a Case I spec");
  }
  const RegionSpec& oriented = out.recurrence.oriented;
  out.parent = structural_stats(build_region(oriented));
  for (std::size_t i = 0; i < 3; ++i) {
    const SubSpec& sub = out.recurrence.subs.at(i);
    if (!sub) continue;
    RegionStats s = structural_stats(build_region(*sub));
    out.w[i] = s.w;
    out.C[i] = s.C;
  }
  const long a = oriented.a;
  const long w = out.parent.w;
  const long C = out.parent.C;
  const long k = static_cast<long>(oriented.d.size());
  const auto& sw = out.w;
  const auto& sc = out.C;
  auto add = [](std::vector<DeltaCheck>& to, std::string name, long predicted,
                long measured) {
    to.push_back({std::move(name), predicted, measured});
  };

  add(out.checks, "w1 = w-1", w - 1, sw[0]);
  add(out.checks, "C1 = C-a-w", C - a - w, sc[0]);
  switch (out.recurrence.id) {
    case CaseId::kI1:
    case CaseId::kI2:
    case CaseId::kI3:
      add(out.checks, "w2 = w-1", w - 1, sw[1]);
      add(out.checks, "w3 = w-2", w - 2, sw[2]);
      add(out.checks, "C2 = C-2w", C - 2 * w, sc[1]);
      add(out.checks, "C3 = C-(a-1)-(w-1)-2w", C - (a - 1) - (w - 1) - 2 * w,
          sc[2]);
      break;
    case CaseId::kI5:
      add(out.checks, "w2 = w", w, sw[1]);
      add(out.checks, "C2 = C-w", C - w, sc[1]);
      add(out.checks, "w3 = w-1", w - 1, sw[2]);
      add(out.checks, "C3 = C-(a-1)-2w", C - (a - 1) - 2 * w, sc[2]);
      break;
    case CaseId::kI4:
    case CaseId::kI6: {
      const long q = out.recurrence.last_long.value_or(0);
      auto emit = [&](std::vector<DeltaCheck>& to, long n,
                      const std::string& tag) {
        long sum_w = 0;
        long sum_w1 = 0;
        for (long i = 0; i <= n - q; ++i) {
          sum_w += w - i;
          sum_w1 += w - i - 1;
        }
        add(to, "w2 = w-(n-q+1)" + tag, w - (n - q + 1), sw[1]);
        add(to, "C2 = C-w-sum(w-i)" + tag, C - w - sum_w, sc[1]);
        add(to, "w3 = w-(n-q+1)-1" + tag, w - (n - q + 1) - 1, sw[2]);
        add(to, "C3 = C-(a-1)-2w-sum(w-i-1)" + tag, C - (a - 1) - 2 * w - sum_w1,
            sc[2]);
      };
      emit(out.checks, k, " [n=k]");
      emit(out.alternate_checks, out.parent.n, " [n=down lines]");
      break;
    }
    default:
      break;
  }
  auto tri = [](long v) { return v * (v + 1) / 2; };
  out.balance_lhs = 1 + sc[0] + sc[1] - tri(sw[0]) - tri(sw[1]);
  out.balance_rhs = C + sc[2] - tri(w) - tri(sw[2]);
  return out;
}

}  // namespace douglas
