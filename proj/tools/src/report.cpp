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


#include "report.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "douglas/errors.hpp"
#include "douglas/shuffle.hpp"
#include "douglas/version.hpp"
#include "json.hpp"

namespace douglas::cli {
namespace {

using Json = nlohmann::ordered_json;

CheckResult make_check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail,
          std::move(detail)};
}

CheckResult skipped(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::kSkip, std::move(detail)};
}

EngineCount timed(std::string engine, const std::function<BigCount()>& fn) {
  EngineCount out;
  out.engine = std::move(engine);
  const auto start = std::chrono::steady_clock::now();
  try {
    out.count = fn();
  } catch (const SizeLimit& e) {
    out.note = std::string("size limit: ") + e.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

BigCount formula_of(const SubSpec& sub) {
  if (!sub) return 1;
  return formula_count(build_region(*sub));
}

CheckResult recurrence_check(const RegionSpec& spec) {
  if (spec.total_size() <= 4) {
    return skipped("recurrence identity", "base case");
  }
  const CaseRecurrence rec = case_recurrence(spec);
  const std::string name = "recurrence " + std::string(to_string(rec.id)) +
                           ": " + std::string(to_string(rec.identity));
  const BigCount whole = formula_count(build_region(rec.oriented));
  const BigCount g1 = formula_of(rec.subs.at(0));
  bool ok = false;
  switch (rec.identity) {
    case IdentityForm::kCondensation:
      ok = whole * formula_of(rec.subs.at(2)) ==
           2 * g1 * formula_of(rec.subs.at(1));
      break;
    case IdentityForm::kDoubling:
      ok = whole == 2 * g1;
      break;
    case IdentityForm::kQuadrupling:
      ok = whole == 4 * g1;
      break;
  }
  std::ostringstream detail;
  detail << to_string(rec.oriented) << (rec.flipped ? " (flipped)" : "");
  for (const SubSpec& s : rec.subs) {
    detail << ' ' << (s ? to_string(*s) : std::string("empty"));
  }
  return make_check(name, ok, detail.str());
}

void delta_checks(const RegionSpec& spec, std::vector<CheckResult>& checks) {
  if (spec.total_size() <= 4) return;
  const CaseRecurrence rec = case_recurrence(spec);
  if (!is_case_one(rec.id)) return;
  const StatsDeltas deltas = stats_deltas(spec);
  const std::string prefix = std::string(to_string(rec.id)) + ": ";
  for (const DeltaCheck& c : deltas.checks) {
    checks.push_back(make_check(
        prefix + c.name, c.holds(),
        "predicted " + std::to_string(c.predicted) + ", measured " +
            std::to_string(c.measured)));
  }
  checks.push_back(make_check(
      prefix + "exponent balance", deltas.balance_holds(),
      std::to_string(deltas.balance_lhs) + " vs " +
          std::to_string(deltas.balance_rhs)));
}

CheckResult kuo_check(const Region& region, const CountOptions& options) {
  const char* name = "kuo condensation";
  try {
    const MatchGraph g = dual_graph(region);
    const KuoCounts k = kuo_counts(g, pick_corners(g), options);
    return make_check(name, k.holds(),
                      to_string(k.lhs()) + " vs " + to_string(k.rhs()));
  } catch (const SizeLimit& e) {
    return skipped(name, e.what());
  } catch (const CornersNotFound& e) {
    return skipped(name, e.what());
  }
}

CheckResult reduction_check(const Region& region,
                            const CountOptions& options) {
  const char* name = "reduction step on AD_3";
  try {
    const AztecGraph g =
        AztecGraph::from_pattern(3, characteristic_matrix(region));
    const ReductionStep step = reduction_step(g);
    const Rational lhs = matching_generating_function(g.graph(), options);
    const Rational rhs =
        step.factor *
        matching_generating_function(step.reduced.graph(), options);
    return make_check(name, lhs == rhs,
                      to_string(lhs) + " vs " + to_string(rhs));
  } catch (const SingularBlock& e) {
    return skipped(name, e.what());
  }
}

CheckResult flip_check(const Region& region, const RegionStats& stats) {
  const RegionSpec other = flipped(region.spec());
  try {
    const RegionStats s = structural_stats(build_region(other));
    const bool ok = formula_exponent(s) == formula_exponent(stats) &&
                    other.a == stats.w && s.w == region.spec().a;
    return make_check("flip symmetry", ok, to_string(other));
  } catch (const SpecInvalid& e) {
    return make_check("flip symmetry", false, e.what());
  }
}

}  // namespace

bool VerifyReport::passed() const {
  for (const CheckResult& c : checks) {
    if (c.status == CheckStatus::kFail) return false;
  }
  return true;
}

VerifyReport verify_spec(const Region& region, CondensationEngine& engine,
                         const CountOptions& options) {
  VerifyReport report;
  report.spec = region.spec();
  report.stats = structural_stats(region);
  const RegionSpec& spec = report.spec;

  report.counts.push_back(timed("brute", [&] {
    return count_matchings(dual_graph(region), options);
  }));
  report.counts.push_back(
      timed("condense", [&] { return engine.count(spec); }));
  report.counts.push_back(timed("shuffle", [&] { return shuffle_count(spec); }));
  report.counts.push_back(
      timed("formula", [&] { return formula_count(region); }));

  std::optional<BigCount> first;
  bool agree = true;
  std::string used;
  for (const EngineCount& c : report.counts) {
    if (!c.count) continue;
    used += used.empty() ? c.engine : "," + c.engine;
    if (!first) first = c.count;
    if (*c.count != *first) agree = false;
  }
  report.checks.push_back(make_check("engines agree", agree, used));

  const long exponent = formula_exponent(report.stats);
  try {
    const ExponentReport e = exponent_report(spec);
    report.checks.push_back(make_check(
        "S = C - w(w+1)/2", e.closed_form == exponent,
        std::to_string(e.closed_form) + " vs " + std::to_string(exponent)));
    report.checks.push_back(make_check("S closed form = iterated shifts",
                                       e.closed_form == e.procedural,
                                       to_string(e.code)));
  } catch (const FormulaProcedureMismatch& e) {
    report.checks.push_back(
        make_check("S closed form = iterated shifts", false, e.what()));
  }

  report.checks.push_back(recurrence_check(spec));
  delta_checks(spec, report.checks);
  report.checks.push_back(kuo_check(region, options));
  report.checks.push_back(reduction_check(region, options));
  report.checks.push_back(flip_check(region, report.stats));
  return report;
}

std::string to_json_line(const VerifyReport& report, bool timings) {
  Json j;
  j["tool"] = "douglas";
  j["version"] = std::string(version());
  j["spec"] = {{"a", report.spec.a}, {"d", report.spec.d}};
  j["name"] = to_string(report.spec);
  const RegionStats& s = report.stats;
  j["stats"] = {{"p", s.p}, {"m", s.m}, {"n", s.n}, {"q", s.q},
                {"w", s.w}, {"C", s.C}, {"T", s.T}};
  Json counts = Json::object();
  Json notes = Json::object();
  for (const EngineCount& c : report.counts) {
    counts[c.engine] = c.count ? Json(to_string(*c.count)) : Json(nullptr);
    if (!c.note.empty()) notes[c.engine] = c.note;
  }
  j["counts"] = std::move(counts);
  if (!notes.empty()) j["notes"] = std::move(notes);
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    const char* status = c.status == CheckStatus::kPass   ? "pass"
                         : c.status == CheckStatus::kFail ? "fail"
                                                          : "skip";
    Json entry = {{"name", c.name}, {"status", status}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  j["pass"] = report.passed();
  if (timings) {
    Json t = Json::object();
    for (const EngineCount& c : report.counts) t[c.engine + "_ms"] = c.millis;
    j["timings"] = std::move(t);
  }
  return j.dump();
}

}  // namespace douglas::cli
