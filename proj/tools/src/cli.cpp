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


#include "douglas/cli.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "douglas/condensation.hpp"
#include "douglas/errors.hpp"
#include "douglas/io.hpp"
#include "douglas/match_graph.hpp"
#include "douglas/region.hpp"
#include "douglas/render.hpp"
#include "douglas/shuffle.hpp"
#include "douglas/version.hpp"
#include "json.hpp"
#include "memo_cache.hpp"
#include "report.hpp"

namespace douglas::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct SpecArgs {
  std::optional<int> a;
  std::vector<int> d;
  std::string file;

  void attach(CLI::App& cmd) {
    cmd.add_option("--a", a, "side parameter a");
    cmd.add_option("--d", d, "layer widths d1,...,dk")->delimiter(',');
    cmd.add_option("--spec", file, "JSON file {\"a\": N, \"d\": [...]}");
  }

  bool given() const { return a || !d.empty() || !file.empty(); }

  RegionSpec resolve() const {
    if (!file.empty()) {
      if (a || !d.empty()) throw UsageError("--spec excludes --a and --d");
      return spec_from_json(read_file(file));
    }
    if (!a || d.empty()) throw UsageError("need --a and --d, or --spec");
    return {*a, d};
  }
};

class MemoSession {
 public:
  MemoSession() : dir_(cache_dir_from_env()) {
    if (dir_) load_memo(engine_, *dir_);
  }
  CondensationEngine& engine() { return engine_; }
  void save(std::ostream& err) {
    if (!dir_) return;
    try {
      save_memo(engine_, *dir_);
    } catch (const std::exception& e) {
      err << "warning: memo cache not saved: " << e.what() << '\n';
    }
  }

 private:
  std::optional<std::filesystem::path> dir_;
  CondensationEngine engine_;
};

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

// count

struct CountArgs {
  SpecArgs spec;
  std::string engine = "formula";
};

int cmd_count(const CountArgs& args, const CountOptions& options,
              std::ostream& out, std::ostream& err) {
  const RegionSpec spec = args.spec.resolve();
  const Region region = build_region(spec);
  BigCount value;
  if (args.engine == "brute") {
    value = count_matchings(dual_graph(region), options);
  } else if (args.engine == "condense") {
    MemoSession memo;
    value = memo.engine().count(spec);
    memo.save(err);
  } else if (args.engine == "shuffle") {
    value = shuffle_count(spec);
  } else {
    value = formula_count(region);
  }
  out << to_string(value) << '\n';
  return kOk;
}

// verify

struct VerifyArgs {
  SpecArgs spec;
  std::optional<int> sweep;
  int jobs = 1;
  bool timings = false;
};

struct SweepItem {
  RegionSpec spec;
  bool valid = false;
  bool passed = false;
  std::string line;
};

void verify_items(std::vector<SweepItem>& items, CondensationEngine& engine,
                  const CountOptions& options, bool timings, int jobs) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      SweepItem& item = items[i];
      try {
        const Region region = build_region(item.spec);
        const VerifyReport report = verify_spec(region, engine, options);
        item.valid = true;
        item.passed = report.passed();
        item.line = to_json_line(report, timings);
      } catch (const SpecInvalid&) {
        item.valid = false;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

int cmd_verify(const VerifyArgs& args, const CountOptions& options,
               std::ostream& out, std::ostream& err) {
  MemoSession memo;
  if (!args.sweep) {
    const RegionSpec spec = args.spec.resolve();
    const VerifyReport report =
        verify_spec(build_region(spec), memo.engine(), options);
    out << to_json_line(report, args.timings) << '\n';
    memo.save(err);
    return report.passed() ? kOk : kCheckFailed;
  }
  if (args.spec.given()) throw UsageError("--sweep excludes a single spec");
  if (*args.sweep < 1) throw UsageError("--sweep needs a positive bound");

  std::vector<SweepItem> items;
  for (const std::vector<int>& d : compositions_up_to(*args.sweep)) {
    const int total = RegionSpec{1, d}.total_size();
    for (int a = 1; a <= total; ++a) {
      SweepItem item;
      item.spec = {a, d};
      items.push_back(std::move(item));
    }
  }
  verify_items(items, memo.engine(), options, args.timings, args.jobs);

  int valid = 0;
  int passed = 0;
  for (const SweepItem& item : items) {
    if (!item.valid) continue;
    ++valid;
    if (item.passed) ++passed;
    out << item.line << '\n';
  }
  Json summary;
  summary["summary"] = {
      {"max_total", *args.sweep},
      {"candidates", items.size()},
      {"valid", valid},
      {"skipped_invalid", static_cast<int>(items.size()) - valid},
      {"passed", passed},
      {"failed", valid - passed}};
  out << summary.dump() << '\n';
  memo.save(err);
  return passed == valid ? kOk : kCheckFailed;
}

// render

struct RenderArgs {
  SpecArgs spec;
  std::string format = "ascii";
  bool matching = false;
  std::string output;
  int unit = 24;
};

int cmd_render(const RenderArgs& args, const CountOptions& options,
               std::ostream& out, std::ostream& err) {
  if (args.matching && args.format != "svg") {
    throw UsageError("--matching needs --format svg");
  }
  const Region region = build_region(args.spec.resolve());
  std::string text;
  if (args.format == "ascii") {
    text = render_ascii(region);
  } else {
    CellPairs pairs;
    if (args.matching) {
      const MatchGraph g = dual_graph(region);
      const auto edges = sample_matching(g, options);
      if (!edges) {
        err << "no perfect matching; rendering without overlay\n";
      } else {
        for (std::size_t e : *edges) {
          pairs.emplace_back(g.vertices()[g.edges()[e].u].id,
                             g.vertices()[g.edges()[e].v].id);
        }
      }
    }
    text = render_svg(region, pairs, args.unit);
  }
  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream file(args.output, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) throw std::runtime_error("cannot write " + args.output);
  }
  return kOk;
}

// trace

Json kuo_json(const RegionSpec& spec, const CountOptions& options) {
  try {
    const MatchGraph g = dual_graph(build_region(spec));
    const KuoCounts k = kuo_counts(g, pick_corners(g), options);
    return {{"whole", to_string(k.whole)},
            {"without_all", to_string(k.without_all)},
            {"without_xy", to_string(k.without_xy)},
            {"without_zt", to_string(k.without_zt)},
            {"without_tx", to_string(k.without_tx)},
            {"without_yz", to_string(k.without_yz)},
            {"holds", k.holds()}};
  } catch (const SizeLimit& e) {
    return {{"skipped", e.what()}};
  } catch (const CornersNotFound& e) {
    return {{"skipped", e.what()}};
  }
}

int cmd_trace(const SpecArgs& args, const CountOptions& options,
              std::ostream& out, std::ostream& err) {
  const RegionSpec root = args.resolve();
  build_region(root);
  MemoSession memo;
  CondensationEngine& engine = memo.engine();
  std::set<RegionSpec> seen;
  bool all_hold = true;
  std::function<void(const RegionSpec&, int)> visit =
      [&](const RegionSpec& spec, int depth) {
        if (!seen.insert(canonical_spec(spec)).second) return;
        Json line;
        line["depth"] = depth;
        line["spec"] = to_string(spec);
        line["count"] = to_string(engine.count(spec));
        if (spec.total_size() <= 4) {
          line["case"] = "base";
          line["kuo"] = kuo_json(spec, options);
          out << line.dump() << '\n';
          return;
        }
        const CaseRecurrence rec = case_recurrence(spec);
        line["case"] = std::string(to_string(rec.id));
        line["flipped"] = rec.flipped;
        line["oriented"] = to_string(rec.oriented);
        line["identity"] = std::string(to_string(rec.identity));
        Json subs = Json::array();
        std::vector<BigCount> values;
        for (const SubSpec& s : rec.subs) {
          subs.push_back(s ? Json(to_string(*s)) : Json("empty"));
          values.push_back(s ? engine.count(*s) : BigCount(1));
        }
        line["subs"] = std::move(subs);
        const BigCount whole = engine.count(rec.oriented);
        bool holds = false;
        switch (rec.identity) {
          case IdentityForm::kCondensation:
            holds = whole * values.at(2) == 2 * values.at(0) * values.at(1);
            break;
          case IdentityForm::kDoubling:
            holds = whole == 2 * values.at(0);
            break;
          case IdentityForm::kQuadrupling:
            holds = whole == 4 * values.at(0);
            break;
        }
        all_hold = all_hold && holds;
        line["identity_holds"] = holds;
        line["kuo"] = kuo_json(spec, options);
        out << line.dump() << '\n';
        for (const SubSpec& s : rec.subs) {
          if (s) visit(*s, depth + 1);
        }
      };
  visit(root, 0);
  memo.save(err);
  return all_hold ? kOk : kCheckFailed;
}

// reduce

struct ReduceArgs {
  SpecArgs spec;
  std::string pattern_file;
  std::optional<int> order;
  bool check = false;
};

int cmd_reduce(const ReduceArgs& args, const CountOptions& options,
               std::ostream& out, std::ostream&) {
  WeightPattern pattern;
  if (!args.pattern_file.empty()) {
    if (args.spec.given()) throw UsageError("--pattern excludes a spec");
    pattern = pattern_from_json(read_file(args.pattern_file));
  } else {
    pattern = characteristic_matrix(build_region(args.spec.resolve()));
  }
  const int order =
      args.order.value_or(static_cast<int>(pattern.rows() / 2));
  if (order < 1) throw UsageError("--order must be positive");
  const AztecGraph graph = AztecGraph::from_pattern(order, pattern);
  std::vector<ChainStep> trace;
  Rational product;
  try {
    product = reduction_chain(graph, &trace);
  } catch (const SingularBlock& e) {
    throw UsageError(e.what());
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    Json line;
    line["step"] = i;
    line["order"] = trace[i].order;
    line["factor"] = to_string(trace[i].factor);
    line["weights_hash"] = hex64(trace[i].weights_hash);
    out << line.dump() << '\n';
  }
  Json last;
  last["product"] = to_string(product);
  int code = kOk;
  if (args.check) {
    const Rational direct = matching_generating_function(graph.graph(), options);
    last["direct"] = to_string(direct);
    last["agree"] = direct == product;
    if (direct != product) code = kCheckFailed;
  }
  out << last.dump() << '\n';
  return code;
}

// dump

struct DumpArgs {
  SpecArgs spec;
  std::string what = "region";
};

int cmd_dump(const DumpArgs& args, std::ostream& out) {
  const Region region = build_region(args.spec.resolve());
  if (args.what == "region") {
    out << region_to_json(region) << '\n';
  } else if (args.what == "graph") {
    out << graph_to_json(dual_graph(region)) << '\n';
  } else {
    out << pattern_to_json(characteristic_matrix(region)) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app("Generalized Douglas regions: tilings, identities, figures",
               "douglas");
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  CountOptions options;
  app.add_option("--max-frontier", options.max_frontier,
                 "widest sweep window for matching counts")
      ->check(CLI::Range(1, 62));

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "count tilings of one region");
  count.spec.attach(*count_cmd);
  count_cmd->add_option("--engine", count.engine, "counting engine")
      ->check(CLI::IsMember({"brute", "condense", "shuffle", "formula"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check engines and identities, one JSON line per spec");
  verify.spec.attach(*verify_cmd);
  verify_cmd->add_option("--sweep", verify.sweep,
                         "every (a, d) with d1+...+dk <= N");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads")
      ->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--timings", verify.timings, "add engine timings");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "draw a region");
  render.spec.attach(*render_cmd);
  render_cmd->add_option("--format", render.format)
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_flag("--matching", render.matching,
                       "overlay one perfect matching");
  render_cmd->add_option("-o,--output", render.output, "output file");
  render_cmd->add_option("--unit", render.unit, "pixels per lattice step")
      ->check(CLI::Range(4, 512));

  SpecArgs trace;
  auto* trace_cmd = app.add_subcommand(
      "trace", "condensation recursion with Kuo counts, one JSON line per node");
  trace.attach(*trace_cmd);

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "reduction chain on an Aztec diamond graph");
  reduce.spec.attach(*reduce_cmd);
  reduce_cmd->add_option("--pattern", reduce.pattern_file,
                         "JSON weight pattern instead of a region");
  reduce_cmd->add_option("--order", reduce.order, "Aztec diamond order");
  reduce_cmd->add_flag("--check", reduce.check,
                       "compare with a direct weighted count");

  DumpArgs dump;
  auto* dump_cmd = app.add_subcommand("dump", "region, graph or pattern JSON");
  dump.spec.attach(*dump_cmd);
  dump_cmd->add_option("--what", dump.what)
      ->check(CLI::IsMember({"region", "graph", "pattern"}));

  std::vector<const char*> argv{"douglas"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidSpec;
  }

  try {
    if (*count_cmd) return cmd_count(count, options, out, err);
    if (*verify_cmd) return cmd_verify(verify, options, out, err);
    if (*render_cmd) return cmd_render(render, options, out, err);
    if (*trace_cmd) return cmd_trace(trace, options, out, err);
    if (*reduce_cmd) return cmd_reduce(reduce, options, out, err);
    return cmd_dump(dump, out);
  } catch (const SpecInvalid& e) {
    err << "invalid spec: " << e.what() << '\n';
    return kInvalidSpec;
  } catch (const SizeLimit& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidSpec;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace douglas::cli
