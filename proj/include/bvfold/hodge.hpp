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

#include "bvfold/lattice.hpp"

namespace bvfold::hodge {

/// The independent Hodge numbers of a Calabi-Yau fourfold.
struct HodgeDiamond4 {
  int h11 = 0;
  int h21 = 0;
  int h31 = 0;
  int h22 = 0;

  /// 4 + 2 h11 - 4 h21 + 2 h31 + h22.
  int euler() const { return 4 + 2 * h11 - 4 * h21 + 2 * h31 + h22; }

  /// h22 = 2 (22 + 2 h11 + 2 h31 - h21), which every Calabi-Yau fourfold satisfies.
  bool satisfies_cy4_identity() const { return h22 == 2 * (22 + 2 * h11 + 2 * h31 - h21); }

  friend bool operator==(const HodgeDiamond4&, const HodgeDiamond4&) = default;
};

/// Hodge numbers of the Borcea-Voisin fourfold of two K3 surfaces with
/// non-symplectic involutions of invariants (r1, a1) and (r2, a2).
///
/// Evaluated over the rationals; a non-integral entry means the invariants
/// are inadmissible and throws InvalidInput, as does an excluded fixed locus.
HodgeDiamond4 dillies_hodge(const lattice::InvolutionInvariants& s1, const lattice::InvolutionInvariants& s2);

/// Same, with delta = 1 on both sides, so (10, 8) means a genus-2 curve plus
/// a rational curve. (10, 10) is always rejected.
HodgeDiamond4 dillies_hodge(int r1, int a1, int r2, int a2);

/// Closed forms for S1 a double plane branched along an n-nodal sextic and S2
/// an elliptic K3 with fibers m I5 + (24 - 5m) I1. Requires 0 <= n <= 8,
/// 0 <= m <= 4.
HodgeDiamond4 bv_hodge(int n, int m);

/// bv_hodge(n, m) == dillies_hodge(n + 1, n + 1, 2 + 2m, 2m).
bool cross_check(int n, int m);

}  // namespace bvfold::hodge
