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

#include <optional>

#include "bvfold/errors.hpp"
#include "bvfold/families.hpp"
#include "bvfold/weierstrass.hpp"
#include "support.hpp"

namespace bvfold::testing {

/// Orders (ordA, ordB) forced at a point, one per additive Kodaira row.
struct ForcedOrders {
  int a;
  int b;
};

inline constexpr ForcedOrders kAdditiveRows[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};

/// With M(p) = 1 and L(p) = 0, A = -3 M^dA + L r and B = 2 M^dB + L r' make
/// Delta vanish at p while A and B do not: a multiplicative fiber I_k, k >= 1.
/// Multiplied by L^2 and L^3 the same pair gives I_k* with k >= 1.
inline std::pair<BinaryForm, BinaryForm> multiplicative_pair(Rng& rng, const ProjPoint1& p, int dA, int dB) {
  const BinaryForm L = linear_at(p);
  const BinaryForm base = p.t() == 1 ? BinaryForm::t() : BinaryForm::s();
  const BinaryForm M = base + random_rational(rng) * L;
  return {Rational(-3) * pow(M, dA) + L * random_form(rng, dA - 1), Rational(2) * pow(M, dB) + L * random_form(rng, dB - 1)};
}

/// One random Weierstrass K3 with up to three special points, each with a
/// randomly chosen fiber type, or a member of one of the explicit families.
/// Returns nullopt when the draw is degenerate or not minimal.
inline std::optional<WeierstrassK3> random_minimal_model(Rng& rng) {
  try {
    switch (uniform(rng, 0, 9)) {
      case 0: {
        families::I5FamilyParams p;
        for (auto& x : p.a) x = random_rational(rng);
        for (auto& x : p.b) x = random_rational(rng);
        return families::build_i5_family(p);
      }
      case 1: {
        const Rational p1 = random_rational(rng), p2 = random_nonzero(rng);
        return families::build_torsion_family({p1, p2});
      }
      default:
        break;
    }
    BinaryForm A({Rational(1)}), B({Rational(1)});
    int dA = 8, dB = 12;
    const int special = uniform(rng, 0, 3);
    for (int k = 0; k < special && dA >= 4; ++k) {
      const ProjPoint1 p = random_point(rng);
      const BinaryForm L = linear_at(p);
      const int kind = uniform(rng, 0, 8);
      if (kind < 7) {
        const auto [oa, ob] = kAdditiveRows[kind];
        if (oa > dA - 2 || ob > dB - 3) continue;
        A = A * pow(L, oa);
        B = B * pow(L, ob);
        dA -= oa;
        dB -= ob;
      } else if (kind == 7) {
        // Fold the remaining degrees into a pair with a multiplicative point.
        auto [a, b] = multiplicative_pair(rng, p, dA, dB);
        return make_model(A * a, B * b);
      } else {
        auto [a, b] = multiplicative_pair(rng, p, dA - 2, dB - 3);
        return make_model(A * pow(L, 2) * a, B * pow(L, 3) * b);
      }
    }
    return make_model(A * random_nonzero_form(rng, dA), B * random_nonzero_form(rng, dB));
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

}  // namespace bvfold::testing
