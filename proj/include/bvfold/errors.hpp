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

#include <stdexcept>
#include <string>

namespace bvfold {

/// Input that violates a documented precondition. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weierstrass data whose discriminant vanishes identically.
class DegenerateModel : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A point of the base with ord(A) >= 4 and ord(B) >= 6.
class NonMinimalModel : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A configuration outside the range a closed formula covers.
class UnsupportedConfiguration : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal identity failed; always a bug. The CLI maps this to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bvfold
