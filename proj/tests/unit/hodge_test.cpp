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

#include <doctest.h>

#include "bvfold/errors.hpp"
#include "bvfold/hodge.hpp"

using namespace bvfold;
using namespace bvfold::hodge;

namespace {
const HodgeDiamond4 kSmooth{5, 30, 137, 552};
const HodgeDiamond4 kFlagship{19, 10, 31, 224};
}  // namespace

TEST_CASE("dillies formulas") {
  CHECK(dillies_hodge(7, 7, 10, 8) == kFlagship);
  CHECK(dillies_hodge(1, 1, 2, 0) == kSmooth);
  CHECK(dillies_hodge(6, 6, 4, 2) == HodgeDiamond4{12, 18, 70, 336});
  CHECK_THROWS_AS(dillies_hodge(10, 10, 2, 0), InvalidInput);
  CHECK_THROWS_AS(dillies_hodge(lattice::ra_to_gk(1, 1), lattice::ra_to_gk(10, 8, 0)), InvalidInput);
  CHECK_THROWS_AS(dillies_hodge(2, 1, 2, 0), InvalidInput);
}

TEST_CASE("closed forms") {
  CHECK(bv_hodge(0, 0) == kSmooth);
  CHECK(bv_hodge(6, 4) == kFlagship);
  CHECK(bv_hodge(5, 1) == HodgeDiamond4{12, 18, 70, 336});
  CHECK(bv_hodge(0, 0).euler() == 720);
  CHECK(bv_hodge(6, 4).euler() == 288);
  CHECK_THROWS_AS(bv_hodge(9, 0), InvalidInput);
  CHECK_THROWS_AS(bv_hodge(0, 5), InvalidInput);
  CHECK_THROWS_AS(bv_hodge(-1, 0), InvalidInput);
}

TEST_CASE("cross check instances") {
  CHECK(cross_check(0, 0));
  CHECK(cross_check(8, 4));
}

TEST_CASE("property: full grid") {
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const auto h = bv_hodge(n, m);
      CHECK(cross_check(n, m));
      CHECK(h.satisfies_cy4_identity());
      CHECK(h.h11 >= 0);
      CHECK(h.h21 >= 0);
      CHECK(h.h31 >= 0);
      CHECK(h.h22 >= 0);
      CHECK(h.euler() % 2 == 0);
      CHECK(h.euler() == 6 * (8 + h.h11 + h.h31 - h.h21));
    }
  }
}

TEST_CASE("property: admissible pairs give CY4 diamonds") {
  int admissible = 0;
  for (int r1 = 1; r1 <= 20; ++r1) {
    for (int a1 = r1 % 2; a1 <= r1; a1 += 2) {
      for (int r2 = 1; r2 <= 20; r2 += 3) {
        for (int a2 = r2 % 2; a2 <= r2; a2 += 2) {
          try {
            const auto h = dillies_hodge(r1, a1, r2, a2);
            CHECK(h.satisfies_cy4_identity());
            ++admissible;
          } catch (const InvalidInput&) {
          }
        }
      }
    }
  }
  CHECK(admissible > 0);
}
