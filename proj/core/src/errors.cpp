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

#include "douglas/errors.hpp"

namespace douglas {

std::string_view reason_code(InvalidReason reason) {
  switch (reason) {
    case InvalidReason::kNonPositive:
      return "nonpositive parameter";
    case InvalidReason::kEllPrimeOnBlack:
      return "ell-prime on black squares";
    case InvalidReason::kBoundariesIntersect:
      return "boundaries intersect";
    case InvalidReason::kCornersNotLevel:
      return "west and east corners not on one horizontal line";
  }
  return "unknown";
}

SpecInvalid::SpecInvalid(InvalidReason reason, const std::string& detail)
    : Error(std::string(reason_code(reason)) +
            (detail.empty() ? "" : ": " + detail)),
      reason_(reason) {}

NotBinaryBlock::NotBinaryBlock(std::size_t block, const std::string& detail)
    : Error("block " + std::to_string(block) + " is not binary: " + detail),
      block_(block) {}

SingularBlock::SingularBlock(std::size_t block_row, std::size_t block_col)
    : Error("block (" + std::to_string(block_row) + ", " +
            std::to_string(block_col) + ") has xz + yw = 0"),
      row_(block_row),
      col_(block_col) {}

}  // namespace douglas
