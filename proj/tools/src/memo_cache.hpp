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


#ifndef DOUGLAS_TOOLS_MEMO_CACHE_HPP_
#define DOUGLAS_TOOLS_MEMO_CACHE_HPP_

#include <filesystem>
#include <optional>

#include "douglas/condensation.hpp"

namespace douglas::cli {

// Value of DOUGLAS_CACHE_DIR, if set and nonempty.
std::optional<std::filesystem::path> cache_dir_from_env();

// JSON lines {"a", "d", "count"}; malformed lines are skipped.
void load_memo(CondensationEngine& engine, const std::filesystem::path& dir);
// Rewrites the file through a temporary and a rename.
void save_memo(const CondensationEngine& engine,
               const std::filesystem::path& dir);

}  // namespace douglas::cli

#endif  // DOUGLAS_TOOLS_MEMO_CACHE_HPP_
