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

#include "bvfold/binary_form.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bvfold/errors.hpp"

namespace bvfold {

namespace {

// Dense univariate polynomial in t, ascending coefficients, no trailing zeros.
// The empty vector is the zero polynomial.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Returns (quotient, remainder); divisor nonzero.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  if (deg(num) < deg(den)) return {Poly{}, std::move(num)};
  Poly quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (int k = deg(num) - deg(den); k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k) + den.size() - 1;
    if (num[top] == 0) continue;
    Rational q = num[top] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[static_cast<std::size_t>(k) + j] -= q * den[j];
  }
  trim(num);
  trim(quot);
  return {std::move(quot), std::move(num)};
}

Poly make_monic(Poly p) {
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    auto r = divmod(std::move(a), b).second;
    a = std::move(b);
    b = r.empty() ? std::move(r) : make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

Poly exact_quotient(const Poly& num, const Poly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.empty()) throw InvariantViolation("exact polynomial division left a remainder");
  return q;
}

Poly dehomogenize(const BinaryForm& f) {
  Poly p(f.coeffs().begin(), f.coeffs().end());
  trim(p);
  return p;
}

}  // namespace

ProjPoint1::ProjPoint1(Rational t, Rational s) : t_(std::move(t)), s_(std::move(s)) {
  if (t_ == 0 && s_ == 0) throw InvalidInput("(0:0) is not a point of P^1");
  if (t_ != 0) {
    s_ /= t_;
    t_ = 1;
  } else {
    s_ = 1;
  }
}

BinaryForm::BinaryForm(int degree) {
  if (degree < 0) throw InvalidInput("negative degree");
  coeffs_.resize(static_cast<std::size_t>(degree) + 1);
}

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("a binary form needs degree + 1 coefficients");
}

BinaryForm BinaryForm::monomial(int t_exp, int s_exp, Rational c) {
  BinaryForm f(t_exp + s_exp);
  f.coeffs_[static_cast<std::size_t>(t_exp)] = std::move(c);
  return f;
}

BinaryForm BinaryForm::homogenize(std::span<const Rational> ascending, int degree) {
  BinaryForm f(degree);
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    if (ascending[i] == 0) continue;
    if (static_cast<int>(i) > degree) throw InvalidInput("polynomial degree exceeds target degree");
    f.coeffs_[i] = ascending[i];
  }
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int BinaryForm::s_power() const {
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i) != 0) return degree() - i;
  }
  throw InvalidInput("order of the zero form is undefined");
}

int BinaryForm::t_power() const {
  for (int i = 0; i <= degree(); ++i) {
    if (coeff(i) != 0) return i;
  }
  throw InvalidInput("order of the zero form is undefined");
}

const Rational& BinaryForm::leading_coefficient() const { return coeff(degree() - s_power()); }

BinaryForm BinaryForm::monic() const {
  BinaryForm f = *this;
  f *= 1 / Rational(leading_coefficient());
  return f;
}

BinaryForm BinaryForm::swapped() const {
  return BinaryForm(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& other) {
  if (degree() != other.degree()) {
    throw InvalidInput("cannot add forms of degree " + std::to_string(degree()) + " and " +
                       std::to_string(other.degree()));
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& other) {
  if (degree() != other.degree()) {
    throw InvalidInput("cannot subtract forms of degree " + std::to_string(degree()) + " and " +
                       std::to_string(other.degree()));
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BinaryForm operator+(BinaryForm f, const BinaryForm& g) { return f += g; }
BinaryForm operator-(BinaryForm f, const BinaryForm& g) { return f -= g; }
BinaryForm operator-(BinaryForm f) { return f *= -1; }
BinaryForm operator*(const Rational& c, BinaryForm f) { return f *= c; }

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  BinaryForm h(f.degree() + g.degree());
  std::vector<Rational> out(static_cast<std::size_t>(h.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; j <= g.degree(); ++j) {
      if (g.coeff(j) == 0) continue;
      out[static_cast<std::size_t>(i + j)] += f.coeff(i) * g.coeff(j);
    }
  }
  return BinaryForm(std::move(out));
}

BinaryForm pow(const BinaryForm& f, unsigned exponent) {
  BinaryForm result = BinaryForm::monomial(0, 0);
  BinaryForm base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational eval(const BinaryForm& f, const ProjPoint1& p) {
  // Homogeneous Horner: ((c_d t + c_{d-1} s) t + c_{d-2} s^2) ...
  Rational value = 0;
  Rational s_pow = 1;
  for (int i = f.degree(); i >= 0; --i) {
    value = value * p.t() + f.coeff(i) * s_pow;
    s_pow *= p.s();
  }
  return value;
}

int vanishing_order(const BinaryForm& f, const ProjPoint1& p) {
  if (f.is_zero()) throw InvalidInput("vanishing order of the zero form is undefined");
  if (p.is_infinity()) return f.s_power();
  // p = (t0 : 1) after rescaling; the root of the dehomogenization is t0/s.
  const Rational root = p.t() / p.s();
  Poly q = dehomogenize(f);
  int order = 0;
  for (;;) {
    // Synthetic division by (t - root).
    Poly quot(q.size() - 1);
    Rational carry = 0;
    for (std::size_t k = q.size(); k-- > 0;) {
      carry = carry * root + q[k];
      if (k > 0) quot[k - 1] = carry;
    }
    if (carry != 0 || q.size() <= 1) return order;
    q = std::move(quot);
    ++order;
  }
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw InvalidInput("division by the zero form");
  if (g.degree() > f.degree()) return std::nullopt;
  const int out_degree = f.degree() - g.degree();
  if (f.is_zero()) return BinaryForm(out_degree);
  if (g.s_power() > f.s_power()) return std::nullopt;
  auto [q, r] = divmod(dehomogenize(f), dehomogenize(g));
  if (!r.empty()) return std::nullopt;
  return BinaryForm::homogenize(q, out_degree);
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
  const bool fz = f.is_zero();
  const bool gz = g.is_zero();
  if (fz && gz) throw InvalidInput("gcd of two zero forms is undefined");
  if (fz) return g.monic();
  if (gz) return f.monic();
  Poly h = poly_gcd(dehomogenize(f), dehomogenize(g));
  const int s_exp = std::min(f.s_power(), g.s_power());
  return BinaryForm::homogenize(h, deg(h) + s_exp);
}

BinaryForm SquarefreeDecomposition::expand() const {
  BinaryForm result = BinaryForm::monomial(0, 0, unit);
  for (const auto& [factor, mult] : factors) result = result * pow(factor, static_cast<unsigned>(mult));
  return result;
}

SquarefreeDecomposition squarefree_stratify(const BinaryForm& f) {
  if (f.is_zero()) throw InvalidInput("squarefree decomposition of the zero form");
  SquarefreeDecomposition out;
  const int s_exp = f.s_power();
  if (s_exp > 0) out.factors.push_back({BinaryForm::s(), s_exp});

  Poly p = dehomogenize(f);
  out.unit = p.back();
  p = make_monic(std::move(p));

  // Yun's algorithm over a field of characteristic zero.
  if (deg(p) > 0) {
    Poly dp = derivative(p);
    Poly a = poly_gcd(p, dp);
    Poly b = exact_quotient(p, a);
    Poly c = exact_quotient(dp, a);
    Poly d = sub(c, derivative(b));
    for (int i = 1; deg(b) > 0; ++i) {
      Poly g = poly_gcd(b, d);
      if (deg(g) > 0) out.factors.push_back({BinaryForm::homogenize(g, deg(g)), i});
      b = exact_quotient(b, g);
      c = exact_quotient(d, g);
      d = sub(c, derivative(b));
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FormPower& x, const FormPower& y) { return canonical_less(x.factor, y.factor); });
  return out;
}

BinaryForm discriminant(const BinaryForm& A, const BinaryForm& B) {
  const int da = A.degree();
  const int db = B.degree();
  if (da <= 0 || da % 4 != 0 || db * 2 != da * 3) {
    throw InvalidInput("Weierstrass coefficients need degrees (4k, 6k); got (" + std::to_string(da) +
                       ", " + std::to_string(db) + ")");
  }
  BinaryForm delta = Rational(4) * pow(A, 3) + Rational(27) * pow(B, 2);
  if (delta.is_zero()) throw DegenerateModel("degenerate model: discriminant vanishes identically");
  return delta;
}

BinaryForm compose(const BinaryForm& f, const BinaryForm& mu, const BinaryForm& lambda) {
  if (mu.degree() != lambda.degree()) throw InvalidInput("substitution forms must share a degree");
  const int d = f.degree();
  BinaryForm result(d * mu.degree());
  // Powers of mu and lambda, reused across terms.
  std::vector<BinaryForm> mu_pow{BinaryForm::monomial(0, 0)};
  std::vector<BinaryForm> la_pow{BinaryForm::monomial(0, 0)};
  for (int i = 1; i <= d; ++i) {
    mu_pow.push_back(mu_pow.back() * mu);
    la_pow.push_back(la_pow.back() * lambda);
  }
  for (int i = 0; i <= d; ++i) {
    if (f.coeff(i) == 0) continue;
    result += f.coeff(i) * (mu_pow[static_cast<std::size_t>(i)] * la_pow[static_cast<std::size_t>(d - i)]);
  }
  return result;
}

bool canonical_less(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  return std::lexicographical_compare(f.coeffs().begin(), f.coeffs().end(), g.coeffs().begin(),
                                      g.coeffs().end());
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    const int j = f.degree() - i;
    const bool unit = (mag == 1) && (i + j > 0);
    if (!unit) os << mag;
    if (i > 0) os << (unit ? "" : "*") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) os << ((unit && i == 0) ? "" : "*") << "s" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  if (first) os << "0";
  return os;
}

}  // namespace bvfold
