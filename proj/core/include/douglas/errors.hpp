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

#ifndef DOUGLAS_ERRORS_HPP_
#define DOUGLAS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace douglas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InvalidReason {
  kNonPositive,
  kEllPrimeOnBlack,
  kBoundariesIntersect,
  kCornersNotLevel,
};

// Stable, human-readable reason codes; the CLI prints these verbatim.
std::string_view reason_code(InvalidReason reason);

class SpecInvalid : public Error {
 public:
  SpecInvalid(InvalidReason reason, const std::string& detail);
  InvalidReason reason() const { return reason_; }

 private:
  InvalidReason reason_;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class ExponentNegative : public Error {
 public:
  using Error::Error;
};

class CornersNotFound : public Error {
 public:
  using Error::Error;
};

class BaseCase : public Error {
 public:
  using Error::Error;
};

class CaseUnreachable : public Error {
 public:
  using Error::Error;
};

class DivisionInexact : public Error {
 public:
  using Error::Error;
};

class NotBinaryBlock : public Error {
 public:
  NotBinaryBlock(std::size_t block, const std::string& detail);
  std::size_t block() const { return block_; }

 private:
  std::size_t block_;
};

class SingularBlock : public Error {
 public:
  SingularBlock(std::size_t block_row, std::size_t block_col);
  std::size_t block_row() const { return row_; }
  std::size_t block_col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class FormulaProcedureMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace douglas

#endif  // DOUGLAS_ERRORS_HPP_
