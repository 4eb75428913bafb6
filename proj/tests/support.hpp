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

#include <cstdint>
#include <random>
#include <vector>

#include "bvfold/binary_form.hpp"
#include "bvfold/form.hpp"
#include "bvfold/rational.hpp"

namespace bvfold::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// p/q with |p| <= num_bound and 1 <= q <= den_bound.
inline Rational random_rational(Rng& rng, int num_bound = 9, int den_bound = 5) {
  Rational r(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero(Rng& rng, int num_bound = 9, int den_bound = 5) {
  for (;;) {
    Rational r = random_rational(rng, num_bound, den_bound);
    if (r != 0) return r;
  }
}

inline BinaryForm random_form(Rng& rng, int degree, int num_bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng, num_bound));
  return BinaryForm(std::move(c));
}

inline BinaryForm random_nonzero_form(Rng& rng, int degree) {
  for (;;) {
    BinaryForm f = random_form(rng, degree);
    if (!f.is_zero()) return f;
  }
}

inline ProjPoint1 random_point(Rng& rng) {
  if (uniform(rng, 0, 9) == 0) return ProjPoint1::infinity();
  return {random_rational(rng), 1};
}

/// The linear form s0 t - t0 s vanishing exactly at (t0:s0).
inline BinaryForm linear_at(const ProjPoint1& p) {
  return BinaryForm({-p.t(), p.s()});
}

template <std::size_t N>
Form<N> random_ternary_like(Rng& rng, int degree, int terms) {
  Form<N> f(degree);
  for (int k = 0; k < terms; ++k) {
    typename Form<N>::Exponent e{};
    int left = degree;
    for (std::size_t i = 0; i + 1 < N; ++i) {
      e[i] = uniform(rng, 0, left);
      left -= e[i];
    }
    e[N - 1] = left;
    f = f + Form<N>::monomial(e, random_nonzero(rng));
  }
  return f;
}

}  // namespace bvfold::testing
