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


#include "memo_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <string>
#include <system_error>

#include "json.hpp"

namespace douglas::cli {
namespace {

constexpr const char* kFileName = "condensation-memo.jsonl";

}  // namespace

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* dir = std::getenv("DOUGLAS_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

void load_memo(CondensationEngine& engine, const std::filesystem::path& dir) {
  std::ifstream in(dir / kFileName);
  std::string line;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    try {
      RegionSpec spec{j.at("a").get<int>(), j.at("d").get<std::vector<int>>()};
      engine.seed(spec, parse_count(j.at("count").get<std::string>()));
    } catch (const std::exception&) {
      continue;
    }
  }
}

void save_memo(const CondensationEngine& engine,
               const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::filesystem::filesystem_error("cache dir", dir, ec);
  const auto target = dir / kFileName;
  const auto temp = dir / (std::string(kFileName) + ".tmp");
  {
    std::ofstream out(temp, std::ios::trunc);
    for (const auto& [spec, count] : engine.memo_snapshot()) {
      nlohmann::ordered_json j;
      j["a"] = spec.a;
      j["d"] = spec.d;
      j["count"] = to_string(count);
      out << j.dump() << '\n';
    }
    if (!out) {
      throw std::filesystem::filesystem_error(
          "cannot write memo", temp,
          std::make_error_code(std::errc::io_error));
    }
  }
  std::filesystem::rename(temp, target);
}

}  // namespace douglas::cli
