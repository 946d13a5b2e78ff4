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

#include "douglas/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace douglas {
namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BigCount pow2(std::uint64_t exponent) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) ||
      den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Rational out;
  out.get_num() = BigCount(std::string(num), 10);
  out.get_den() = BigCount(std::string(den), 10);
  if (out.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  out.canonicalize();
  return out;
}

BigCount parse_count(std::string_view text) {
  if (!valid_integer_text(text) || text.front() == '+') {
    throw std::invalid_argument("malformed integer: '" + std::string(text) +
                                "'");
  }
  return BigCount(std::string(text), 10);
}

std::string to_string(const BigCount& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

long log2_exact(const BigCount& value) {
  if (value <= 0) return -1;
  std::size_t bit = mpz_scan1(value.get_mpz_t(), 0);
  if (mpz_sizeinbase(value.get_mpz_t(), 2) != bit + 1) return -1;
  return static_cast<long>(bit);
}

}  // namespace douglas
