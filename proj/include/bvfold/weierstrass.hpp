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

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvfold/binary_form.hpp"

namespace bvfold {

/// Order of the zero form along any divisor.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max() / 4;

/// Kodaira fiber type. Family I with n = 0 is the smooth fiber, family IStar
/// with n = 0 is I0*.
struct KodairaType {
  enum class Family { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

  Family family = Family::I;
  int n = 0;

  static KodairaType I(int n) { return {Family::I, n}; }
  static KodairaType IStar(int n) { return {Family::IStar, n}; }

  int euler() const;
  /// True for I_n, II, III, IV.
  bool reduced() const;
  bool multiplicative() const { return family == Family::I && n >= 1; }
  /// "I5", "II", "I0*", "IV*", ...
  std::string name() const;

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// Kodaira's table for a minimal Weierstrass model. Throws InvariantViolation
/// for a triple that matches no row; throws NonMinimalModel when
/// ordA >= 4 and ordB >= 6.
KodairaType classify_orders(int ordA, int ordB, int ordDelta);

/// Points of P^1 sharing one order triple: the roots of a squarefree factor.
struct FiberStratum {
  BinaryForm factor;
  int point_count = 0;
  int ordA = 0;
  int ordB = 0;
  int ordDelta = 0;
  KodairaType type;
};

struct FiberInventory {
  std::vector<FiberStratum> strata;
  int euler_total = 0;

  /// Number of points carrying the given type.
  int count(const KodairaType& type) const;
  /// Number of distinct singular points.
  int point_count() const;
};

/// y^2 = x^3 + A x + B over P^1 with deg A = 8, deg B = 12. Always minimal
/// with a nonzero discriminant.
class WeierstrassK3 {
 public:
  const BinaryForm& A() const { return A_; }
  const BinaryForm& B() const { return B_; }
  const BinaryForm& discriminant() const { return delta_; }
  const FiberInventory& inventory() const { return inventory_; }

 private:
  friend WeierstrassK3 make_model(BinaryForm A, BinaryForm B);
  WeierstrassK3() = default;

  BinaryForm A_;
  BinaryForm B_;
  BinaryForm delta_;
  FiberInventory inventory_;
};

/// Validates degrees, the discriminant, and minimality at every root of the
/// discriminant. Throws InvalidInput, DegenerateModel, or NonMinimalModel.
WeierstrassK3 make_model(BinaryForm A, BinaryForm B);

/// Squarefree strata of the discriminant, split by gcds with A and B until
/// each piece has constant (ordA, ordB, ordDelta), then classified. Strata are
/// sorted by factor (degree, then coefficients).
FiberInventory fiber_inventory(const BinaryForm& A, const BinaryForm& B);
const FiberInventory& fiber_inventory(const WeierstrassK3& model);

/// Genus of the trisection x^3 + A x + B = 0 by Riemann-Hurwitz for the 3:1
/// cover of P^1, each root of the discriminant a simple branch point. Only
/// defined when every singular fiber is I_n with n odd; otherwise throws
/// UnsupportedConfiguration.
int genus_trisection(const WeierstrassK3& model);

/// Number m of I5 points when the singular fibers are exactly
/// m I5 + (24 - 5m) I1; nullopt otherwise.
std::optional<int> i5_i1_count(const FiberInventory& inventory);

/// (r, a) = (2 + 2m, 2m) of the elliptic involution on a K3 with fibers
/// m I5 + (24 - 5m) I1. Throws UnsupportedConfiguration on other inventories.
std::pair<int, int> involution_invariants_s2(const WeierstrassK3& model);

}  // namespace bvfold
