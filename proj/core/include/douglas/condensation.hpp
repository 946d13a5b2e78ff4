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

#ifndef DOUGLAS_CONDENSATION_HPP_
#define DOUGLAS_CONDENSATION_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "douglas/match_graph.hpp"
#include "douglas/numeric.hpp"
#include "douglas/region.hpp"

namespace douglas {

// Vertex indices; x and z black, y and t white, in cyclic order x, y, z, t
// around the outer face.
struct CornerQuad {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
  std::size_t t = 0;
};

// Extremes along the diagonal level (position y - x): x is the black vertex
// highest up (westmost on ties), z the lowest black (eastmost), t the
// highest white (eastmost) and y the lowest white (westmost).
CornerQuad pick_corners(const MatchGraph& graph);

// The six counts of the condensation identity
//   M(G) M(G-xyzt) = M(G-xy) M(G-zt) + M(G-tx) M(G-yz).
struct KuoCounts {
  BigCount whole;
  BigCount without_all;
  BigCount without_xy;
  BigCount without_zt;
  BigCount without_tx;
  BigCount without_yz;

  BigCount lhs() const { return whole * without_all; }
  BigCount rhs() const {
    return without_xy * without_zt + without_tx * without_yz;
  }
  bool holds() const { return lhs() == rhs(); }
};

KuoCounts kuo_counts(const MatchGraph& graph, const CornerQuad& quad,
                     const CountOptions& options = {});
bool verify_kuo(const MatchGraph& graph, const CornerQuad& quad,
                const CountOptions& options = {});

enum class CaseId {
  kI1,
  kI2,
  kI3,
  kI4,
  kI5,
  kI6,
  kII1,
  kII2a,
  kII2bi,
  kII2bii,
  kII2biii,
};

std::string_view to_string(CaseId id);
bool is_case_one(CaseId id);

enum class IdentityForm {
  kCondensation,  // M * M3 = 2 * M1 * M2
  kDoubling,      // M = 2 * M1
  kQuadrupling,   // M = 4 * M1
};

std::string_view to_string(IdentityForm form);

// A sub-region; nullopt stands for the empty region (one empty matching).
using SubSpec = std::optional<RegionSpec>;

struct CaseRecurrence {
  CaseId id = CaseId::kI1;
  RegionSpec oriented;  // the spec after the optional flip
  bool flipped = false;
  IdentityForm identity = IdentityForm::kCondensation;
  std::vector<SubSpec> subs;  // G1, G2, G3 (only G1 for the Case II.1/E forms)
  std::optional<int> first_long;  // smallest index > 1 with d >= 2 (1-based)
  std::optional<int> last_long;   // largest index < k with d >= 2 (1-based)
};

// Throws BaseCase for T <= 4 and CaseUnreachable when no branch applies.
// The spec is assumed valid.
CaseRecurrence case_recurrence(const RegionSpec& spec);

// Smallest of the spec and its flip.
RegionSpec canonical_spec(const RegionSpec& spec);

// Golden counts for the valid specs with total size at most 4.
const std::vector<std::pair<RegionSpec, BigCount>>& base_table();

// Solves the case identities recursively. The memo table is the only shared
// state and is safe for concurrent use.
class CondensationEngine {
 public:
  BigCount count(const RegionSpec& spec);

  std::size_t memo_size() const;
  std::vector<std::pair<RegionSpec, BigCount>> memo_snapshot() const;
  // Seeds the memo; ignored when the key is already present.
  void seed(const RegionSpec& spec, const BigCount& value);

 private:
  BigCount solve(const RegionSpec& spec);
  std::optional<BigCount> lookup(const RegionSpec& key) const;

  mutable std::shared_mutex mutex_;
  std::map<RegionSpec, BigCount> memo_;
};

BigCount condensation_count(const RegionSpec& spec);

struct DeltaCheck {
  std::string name;
  long predicted = 0;
  long measured = 0;
  bool holds() const { return predicted == measured; }
};

struct StatsDeltas {
  CaseRecurrence recurrence;
  RegionStats parent;  // of the oriented spec
  std::array<int, 3> w{};
  std::array<int, 3> C{};
  std::vector<DeltaCheck> checks;
  // Eqs. for Cases I.4/I.6 re-read with n as the number of black down
  // triangle lines instead of the sequence length.
  std::vector<DeltaCheck> alternate_checks;
  long balance_lhs = 0;
  long balance_rhs = 0;

  bool balance_holds() const { return balance_lhs == balance_rhs; }
  bool all_hold() const;
};

// Only for Case I specs; throws std::invalid_argument otherwise.
StatsDeltas stats_deltas(const RegionSpec& spec);

}  // namespace douglas

#endif  // DOUGLAS_CONDENSATION_HPP_
