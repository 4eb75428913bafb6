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

#include <array>
#include <utility>

#include "bvfold/binary_form.hpp"
#include "bvfold/weierstrass.hpp"

namespace bvfold::families {

/// Free coefficients of the one-I5 family: a[i-1] multiplies t^i s^(8-i) in A
/// (i = 1..7) and b[i-5] multiplies t^i s^(12-i) in B (i = 5..12).
struct I5FamilyParams {
  std::array<Rational, 7> a{};
  std::array<Rational, 8> b{};
};

/// The coefficients b_0..b_4 of B forced by an I5 fiber over t = 0 with
/// a_0 = -3.
std::array<Rational, 5> forced_b(const I5FamilyParams& p);

/// A = t^8 + sum a_i t^i s^(8-i) - 3 s^8 and B = 2 s^12 + (forced b_1..b_4)
/// + free b_5..b_12. The discriminant vanishes to order >= 5 at (0:1).
/// Throws DegenerateModel (or NonMinimalModel) for bad specializations.
WeierstrassK3 build_i5_family(const I5FamilyParams& p);

/// Coefficient forms (A, B) in (mu, lambda) of the extremal rational elliptic
/// surface with two I5 and two I1 fibers and a 5-torsion section.
std::pair<BinaryForm, BinaryForm> rational_5511_model();

/// Parameters of the quadratic base change mu = p1 t^2 + s^2,
/// lambda = t^2 + s^2 / p2, branched over (p1:1) and (p2:1).
struct TorsionFamilyParams {
  Rational p1;
  Rational p2;
};

/// Pulls the rational surface back along the base change. Requires p2 != 0,
/// p1 != p2 (otherwise the map is constant), and smooth rational fibers over
/// both branch values; throws InvalidInput naming the offending value.
WeierstrassK3 build_torsion_family(const TorsionFamilyParams& p);

/// True iff the singular fibers are exactly m I5 + (24 - 5m) I1.
bool verify_configuration(const WeierstrassK3& model, int m);

}  // namespace bvfold::families
