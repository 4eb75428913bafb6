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
#include <ostream>
#include <span>
#include <vector>

#include "bvfold/rational.hpp"

namespace bvfold {

/// A point (t:s) of the projective line, normalized so that the first
/// nonzero coordinate equals 1.
class ProjPoint1 {
 public:
  ProjPoint1(Rational t, Rational s);

  static ProjPoint1 infinity() { return {1, 0}; }  // (1:0), i.e. s = 0

  const Rational& t() const { return t_; }
  const Rational& s() const { return s_; }
  bool is_infinity() const { return s_ == 0; }

  friend bool operator==(const ProjPoint1&, const ProjPoint1&) = default;

 private:
  Rational t_;
  Rational s_;
};

/// Homogeneous form of degree d in (t, s). Coefficient i multiplies t^i s^(d-i).
///
/// The zero form keeps its degree, so degree bookkeeping stays exact through
/// sums that cancel.
class BinaryForm {
 public:
  BinaryForm() : coeffs_(1) {}
  explicit BinaryForm(int degree);
  explicit BinaryForm(std::vector<Rational> coeffs);

  static BinaryForm monomial(int t_exp, int s_exp, Rational c = 1);
  static BinaryForm t() { return monomial(1, 0); }
  static BinaryForm s() { return monomial(0, 1); }
  /// Homogenizes a(t) = sum a_i t^i (ascending coefficients) to the given degree.
  static BinaryForm homogenize(std::span<const Rational> ascending, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Exponent of the largest power of s dividing the form (the order at (1:0)).
  /// Requires a nonzero form.
  int s_power() const;
  /// Exponent of the largest power of t dividing the form (the order at (0:1)).
  int t_power() const;

  /// Coefficient of the highest power of t present; requires a nonzero form.
  const Rational& leading_coefficient() const;
  BinaryForm monic() const;
  /// f(s, t).
  BinaryForm swapped() const;

  BinaryForm& operator+=(const BinaryForm& other);
  BinaryForm& operator-=(const BinaryForm& other);
  BinaryForm& operator*=(const Rational& c);

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

BinaryForm operator+(BinaryForm f, const BinaryForm& g);
BinaryForm operator-(BinaryForm f, const BinaryForm& g);
BinaryForm operator-(BinaryForm f);
BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator*(const Rational& c, BinaryForm f);
BinaryForm pow(const BinaryForm& f, unsigned exponent);

/// Value at the normalized representative of p.
Rational eval(const BinaryForm& f, const ProjPoint1& p);

/// Number of times the linear form vanishing at p divides f.
/// Throws InvalidInput on the zero form.
int vanishing_order(const BinaryForm& f, const ProjPoint1& p);

/// f / g when g divides f exactly, otherwise nullopt. g must be nonzero.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g);

/// Monic gcd. The power of s is tracked separately, so common roots at (1:0)
/// are kept. Throws InvalidInput when both inputs are zero.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

struct FormPower {
  BinaryForm factor;
  int multiplicity = 0;
};

/// f = unit * prod factor^multiplicity with monic, squarefree, pairwise
/// coprime factors. A root at (1:0) appears as the factor s.
struct SquarefreeDecomposition {
  Rational unit;
  std::vector<FormPower> factors;

  BinaryForm expand() const;
};

SquarefreeDecomposition squarefree_stratify(const BinaryForm& f);

/// 4A^3 + 27B^2 for deg A = 4k, deg B = 6k (k = 2 for a K3, k = 1 for a
/// rational elliptic surface). Throws DegenerateModel when it vanishes
/// identically.
BinaryForm discriminant(const BinaryForm& A, const BinaryForm& B);

/// f(mu(t,s), lambda(t,s)) for forms mu, lambda of equal degree.
BinaryForm compose(const BinaryForm& f, const BinaryForm& mu, const BinaryForm& lambda);

/// Strict weak order: degree first, then coefficients from t^0 upward.
bool canonical_less(const BinaryForm& f, const BinaryForm& g);

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

}  // namespace bvfold
