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

#include "bvfold/families.hpp"

#include <string>
#include <vector>

#include "bvfold/errors.hpp"

namespace bvfold::families {

std::array<Rational, 5> forced_b(const I5FamilyParams& p) {
  const Rational& a1 = p.a[0];
  const Rational& a2 = p.a[1];
  const Rational& a3 = p.a[2];
  const Rational& a4 = p.a[3];
  const Rational a1_2 = a1 * a1;
  return {
      Rational(2),
      -a1,
      -a2 + a1_2 / 12,
      -a3 + a2 * a1 / 6 + a1_2 * a1 / 216,
      -a4 + a1_2 * a1_2 / 1728 + a3 * a1 / 6 + a2 * a2 / 12 + a2 * a1_2 / 72,
  };
}

WeierstrassK3 build_i5_family(const I5FamilyParams& p) {
  std::vector<Rational> a(9);
  a[0] = -3;
  for (int i = 1; i <= 7; ++i) a[static_cast<std::size_t>(i)] = p.a[static_cast<std::size_t>(i - 1)];
  a[8] = 1;

  std::vector<Rational> b(13);
  const auto low = forced_b(p);
  for (std::size_t i = 0; i < low.size(); ++i) b[i] = low[i];
  for (std::size_t i = 5; i <= 12; ++i) b[i] = p.b[i - 5];

  return make_model(BinaryForm(std::move(a)), BinaryForm(std::move(b)));
}

std::pair<BinaryForm, BinaryForm> rational_5511_model() {
  // Coefficient i multiplies mu^i lambda^(d-i).
  BinaryForm A({Rational(-1, 48), Rational(1, 4), Rational(-7, 24), Rational(-1, 4), Rational(-1, 48)});
  BinaryForm B({Rational(1, 864), Rational(-1, 48), Rational(25, 288), Rational(0), Rational(25, 288),
                Rational(1, 48), Rational(1, 864)});
  return {std::move(A), std::move(B)};
}

WeierstrassK3 build_torsion_family(const TorsionFamilyParams& p) {
  if (p.p2 == 0) throw InvalidInput("p2 must be nonzero");
  if (p.p1 == p.p2) throw InvalidInput("p1 = p2 makes the base change constant");

  const auto [A, B] = rational_5511_model();
  const BinaryForm delta_rational = discriminant(A, B);
  for (const Rational* branch : {&p.p1, &p.p2}) {
    if (eval(delta_rational, ProjPoint1(*branch, 1)) == 0) {
      throw InvalidInput("the rational fiber over the branch value (" + to_string(*branch) +
                         ":1) is singular");
    }
  }

  const BinaryForm mu = p.p1 * BinaryForm::monomial(2, 0) + BinaryForm::monomial(0, 2);
  const BinaryForm lambda = BinaryForm::monomial(2, 0) + (1 / p.p2) * BinaryForm::monomial(0, 2);
  return make_model(compose(A, mu, lambda), compose(B, mu, lambda));
}

bool verify_configuration(const WeierstrassK3& model, int m) {
  if (m < 0 || m > 4) throw InvalidInput("m must lie in 0..4");
  const auto found = i5_i1_count(model.inventory());
  return found && *found == m;
}

}  // namespace bvfold::families
