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

#include "bvfold/sextic.hpp"

#include <algorithm>
#include <string>

#include "bvfold/errors.hpp"
#include "bvfold/lattice.hpp"
#include "bvfold/matrix.hpp"

namespace bvfold::sextic {

namespace {

std::string show(const PlanePoint& p) {
  return "(" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + ")";
}

std::vector<TernaryForm::Exponent> monomials(int degree) {
  std::vector<TernaryForm::Exponent> out;
  for (int i = degree; i >= 0; --i) {
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  }
  return out;
}

Rational monomial_value(const TernaryForm::Exponent& e, const PlanePoint& p) {
  Rational v = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    for (int k = 0; k < e[i]; ++k) v *= p[i];
  }
  return v;
}

void check_general_position(NodalSextic& s) {
  const auto& pts = s.nodes;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        RationalMatrix m(3, 3);
        for (std::size_t c = 0; c < 3; ++c) {
          m(0, c) = pts[i][c];
          m(1, c) = pts[j][c];
          m(2, c) = pts[k][c];
        }
        if (m.determinant() == 0) {
          s.warnings.push_back("nodes " + show(pts[i]) + ", " + show(pts[j]) + ", " + show(pts[k]) +
                               " are collinear");
        }
      }
    }
  }
  if (n >= 6) {
    // Six points lie on a conic iff the 6x6 matrix of conic monomials is singular.
    const auto conic = monomials(2);
    std::vector<std::size_t> pick(6);
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + 6, true);
    do {
      std::size_t r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask[i]) pick[r++] = i;
      }
      RationalMatrix m(6, 6);
      for (std::size_t row = 0; row < 6; ++row) {
        for (std::size_t c = 0; c < 6; ++c) m(row, c) = monomial_value(conic[c], pts[pick[row]]);
      }
      if (m.determinant() == 0) {
        std::string names;
        for (auto idx : pick) names += (names.empty() ? "" : ", ") + show(pts[idx]);
        s.warnings.push_back("nodes " + names + " lie on a conic");
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
}

}  // namespace

PlanePoint normalize(const PlanePoint& p) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (p[i] != 0) {
      const Rational inv = 1 / p[i];
      return {p[0] * inv, p[1] * inv, p[2] * inv};
    }
  }
  throw InvalidInput("(0:0:0) is not a point of P^2");
}

std::size_t hessian_rank(const TernaryForm& f, const PlanePoint& p) {
  RationalMatrix h(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const TernaryForm fi = f.partial(i);
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = fi.partial(j).eval(p);
  }
  return h.rank();
}

NodalSextic validate(TernaryForm f6, std::vector<PlanePoint> nodes, bool irreducible_attested) {
  if (f6.degree() != 6) throw InvalidInput("branch curve must have degree 6, got " + std::to_string(f6.degree()));
  if (f6.is_zero()) throw InvalidInput("branch curve is the zero form");
  const int n = static_cast<int>(nodes.size());
  if (n > 8) throw InvalidInput("at most 8 nodes are supported, got " + std::to_string(n));

  for (auto& p : nodes) p = normalize(p);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (nodes[i] == nodes[j]) throw InvalidInput("duplicate node " + show(nodes[i]));
    }
  }

  const std::array<TernaryForm, 3> grad{f6.partial(0), f6.partial(1), f6.partial(2)};
  for (const auto& p : nodes) {
    if (f6.eval(p) != 0) throw InvalidInput("node " + show(p) + " does not lie on the sextic");
    for (const auto& g : grad) {
      if (g.eval(p) != 0) throw InvalidInput("node " + show(p) + " is a smooth point of the sextic");
    }
    // At a singular point the Hessian kills p (Euler), so rank 2 is the most
    // it can have; rank 2 is exactly an ordinary double point.
    if (hessian_rank(f6, p) < 2) {
      throw InvalidInput("node " + show(p) + " is worse than an ordinary double point");
    }
  }

  NodalSextic s{std::move(f6), std::move(nodes), irreducible_attested, {}};
  check_general_position(s);
  if (auto caveat = lattice::very_ample_caveat(n)) s.warnings.push_back(*caveat);
  return s;
}

int genus_branch(int n) {
  if (n < 0 || n > 8) throw InvalidInput("node count must lie in 0..8, got " + std::to_string(n));
  return 10 - n;
}

std::vector<TernaryForm> sextics_singular_at(std::span<const PlanePoint> points) {
  // Vanishing of the gradient at p is linear in the coefficients; by Euler's
  // relation it also forces f(p) = 0.
  const auto mons = monomials(6);
  RationalMatrix m(3 * points.size(), mons.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t c = 0; c < mons.size(); ++c) {
      for (std::size_t var = 0; var < 3; ++var) {
        auto e = mons[c];
        if (e[var] == 0) continue;
        const Rational coeff = e[var];
        --e[var];
        m(3 * k + var, c) = coeff * monomial_value(e, points[k]);
      }
    }
  }
  std::vector<TernaryForm> basis;
  for (const auto& v : m.kernel()) {
    TernaryForm f(6);
    for (std::size_t c = 0; c < mons.size(); ++c) f.add_term(mons[c], v[c]);
    basis.push_back(std::move(f));
  }
  return basis;
}

TernaryForm sextic_singular_at(std::span<const PlanePoint> points, std::span<const Rational> weights) {
  const auto basis = sextics_singular_at(points);
  TernaryForm f(6);
  for (std::size_t i = 0; i < basis.size() && i < weights.size(); ++i) f += weights[i] * basis[i];
  if (f.is_zero()) return f;
  // Same curve, scaled to coprime integer coefficients with a positive leading term.
  Integer den = 1, num = 0;
  for (const auto& [e, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : f.terms()) {
    const Integer scaled = c.get_num() * (den / c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (f.terms().rbegin()->second < 0) scale = -scale;
  return scale * f;
}

}  // namespace bvfold::sextic
