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

#ifndef DOUGLAS_NUMERIC_HPP_
#define DOUGLAS_NUMERIC_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace douglas {

// Exact counts and weights. GMP keeps mpq_class values canonical (reduced,
// positive denominator) across arithmetic, so equality is structural.
using BigCount = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms; throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den = 1);

BigCount pow2(std::uint64_t exponent);
Rational pow(const Rational& base, unsigned exponent);

// Accepts "p", "-p" or "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
BigCount parse_count(std::string_view text);

std::string to_string(const BigCount& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Returns e if value == 2^e, -1 otherwise.
long log2_exact(const BigCount& value);

}  // namespace douglas

#endif  // DOUGLAS_NUMERIC_HPP_
