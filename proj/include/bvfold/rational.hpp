/*
   Copyright 2026 The bvfold Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bvfold {

/// Arbitrary-precision rational, always canonical: lowest terms, positive
/// denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
/// Throws InvalidInput on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

/// Integer numerators of `values` over their least common denominator.
inline std::pair<std::vector<Integer>, Integer> over_common_denominator(std::span<const Rational> values) {
  Integer den = 1;
  for (const auto& v : values) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> nums;
  nums.reserve(values.size());
  for (const auto& v : values) nums.push_back(v.get_num() * (den / v.get_den()));
  return {std::move(nums), den};
}

/// powers[k] = base^k for k = 0..top.
inline std::vector<Integer> power_table(const Integer& base, int top) {
  std::vector<Integer> powers(static_cast<std::size_t>(top) + 1, Integer(1));
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * base;
  return powers;
}

}  // namespace bvfold
