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

#include "bvfold/rational.hpp"

#include <cctype>
#include <string>

#include "bvfold/errors.hpp"

namespace bvfold {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_unsigned_literal(std::string_view s) {
  return !s.empty() && s.front() != '-' && s.front() != '+' && is_integer_literal(s);
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  }
  Rational result;
  if (slash == std::string_view::npos) {
    result = Rational(Integer(strip_plus(num)));
    return result;
  }
  const std::string_view den = text.substr(slash + 1);
  if (!is_unsigned_literal(den)) {
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  }
  Integer d(std::string{den});
  if (d == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  result = Rational(Integer(strip_plus(num)), d);
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace bvfold
