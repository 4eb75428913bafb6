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

#include "bvfold/hodge.hpp"

#include <string>

#include "bvfold/errors.hpp"
#include "bvfold/rational.hpp"

namespace bvfold::hodge {

namespace {

int integral(const Rational& value, const char* name) {
  if (!is_integral(value) || value < 0) {
    throw InvalidInput(std::string("inadmissible invariants: ") + name + " = " + to_string(value));
  }
  return static_cast<int>(value.get_num().get_si());
}

void require_admissible(const lattice::InvolutionInvariants& inv) {
  if (inv.excluded != lattice::ExcludedCase::None) {
    throw InvalidInput("(r, a) = (" + std::to_string(inv.r) + ", " + std::to_string(inv.a) +
                       ") has a fixed locus that is empty or two elliptic curves");
  }
}

}  // namespace

HodgeDiamond4 dillies_hodge(const lattice::InvolutionInvariants& s1, const lattice::InvolutionInvariants& s2) {
  require_admissible(s1);
  require_admissible(s2);
  const Rational r1 = s1.r, a1 = s1.a, r2 = s2.r, a2 = s2.a;
  const Rational half(1, 2), quarter(1, 4);

  const Rational h11 = 1 + quarter * (r1 * r2 - r1 * a2 - a1 * r2 + a1 * a2) + half * (3 * r1 - a1 + 3 * r2 - a2);
  const Rational h21 = 22 - half * r1 * r2 + half * a1 * a2 + 5 * r1 - 6 * a1 + 5 * r2 - 6 * a2;
  const Rational h22 = 648 + 3 * r1 * r2 + a1 * a2 - 30 * r1 - 30 * r2 - 12 * a1 - 12 * a2;
  const Rational h31 = 161 + quarter * (r1 * r2 + a1 * a2 + r1 * a2 + a1 * r2) -
                       half * (13 * r1 + 13 * r2 + 11 * a1 + 11 * a2);

  return {integral(h11, "h11"), integral(h21, "h21"), integral(h31, "h31"), integral(h22, "h22")};
}

HodgeDiamond4 dillies_hodge(int r1, int a1, int r2, int a2) {
  return dillies_hodge(lattice::ra_to_gk(r1, a1), lattice::ra_to_gk(r2, a2));
}

HodgeDiamond4 bv_hodge(int n, int m) {
  if (n < 0 || n > 8) throw InvalidInput("n must lie in 0..8, got " + std::to_string(n));
  if (m < 0 || m > 4) throw InvalidInput("m must lie in 0..4, got " + std::to_string(m));
  return {
      5 + n + 2 * m,
      2 * (15 - n - m),
      137 - 11 * n - 22 * m + 2 * n * m,
      4 * (138 - 9 * n - 19 * m + 2 * n * m),
  };
}

bool cross_check(int n, int m) { return bv_hodge(n, m) == dillies_hodge(n + 1, n + 1, 2 + 2 * m, 2 * m); }

}  // namespace bvfold::hodge
