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


#ifndef DOUGLAS_TOOLS_REPORT_HPP_
#define DOUGLAS_TOOLS_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "douglas/condensation.hpp"
#include "douglas/match_graph.hpp"
#include "douglas/region.hpp"

namespace douglas::cli {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct EngineCount {
  std::string engine;
  std::optional<BigCount> count;  // empty when the engine was skipped
  std::string note;
  double millis = 0;
};

struct VerifyReport {
  RegionSpec spec;
  RegionStats stats;
  std::vector<EngineCount> counts;
  std::vector<CheckResult> checks;

  bool passed() const;
};

VerifyReport verify_spec(const Region& region, CondensationEngine& engine,
                         const CountOptions& options);

// One JSON line; timings appear only on request, under their own key.
std::string to_json_line(const VerifyReport& report, bool timings);

}  // namespace douglas::cli

#endif  // DOUGLAS_TOOLS_REPORT_HPP_
