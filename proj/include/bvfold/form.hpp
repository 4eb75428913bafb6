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
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "bvfold/errors.hpp"
#include "bvfold/rational.hpp"

namespace bvfold {

/// Sparse homogeneous form in N variables over the rationals.
///
/// Terms live in an ordered map keyed by exponent vectors; the map order is
/// lexicographic, which doubles as the monomial order for exact division.
/// No zero coefficient is ever stored.
template <std::size_t N>
class Form {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, Rational>;

  explicit Form(int degree = 0) : degree_(degree) {
    if (degree < 0) throw InvalidInput("negative degree");
  }

  Form(int degree, const Terms& terms) : Form(degree) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static Form monomial(const Exponent& e, Rational c = 1) {
    Form f(total(e));
    f.add_term(e, std::move(c));
    return f;
  }

  /// The i-th coordinate variable, a linear form.
  static Form variable(std::size_t i) {
    Exponent e{};
    e.at(i) = 1;
    return monomial(e);
  }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c * x^e; throws when the exponent has the wrong total degree.
  void add_term(const Exponent& e, const Rational& c) {
    if (total(e) != degree_) {
      throw InvalidInput("exponent of total degree " + std::to_string(total(e)) +
                         " in a form of degree " + std::to_string(degree_));
    }
    for (int x : e) {
      if (x < 0) throw InvalidInput("negative exponent");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Form partial(std::size_t var) const {
    Form out(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent d = e;
      --d[var];
      out.add_term(d, c * e[var]);
    }
    return out;
  }

  Rational eval(std::span<const Rational, N> point) const {
    // Homogeneity lets the whole sum run over the integers.
    const auto [xs, x_den] = over_common_denominator(point);
    std::array<std::vector<Integer>, N> powers;
    for (std::size_t i = 0; i < N; ++i) powers[i] = power_table(xs[i], degree_);
    std::vector<Rational> coeffs;
    coeffs.reserve(terms_.size());
    for (const auto& [e, c] : terms_) coeffs.push_back(c);
    const auto [cs, c_den] = over_common_denominator(coeffs);
    Integer acc = 0, term;
    std::size_t k = 0;
    for (const auto& [e, c] : terms_) {
      term = cs[k++];
      for (std::size_t i = 0; i < N; ++i) term *= powers[i][static_cast<std::size_t>(e[i])];
      acc += term;
    }
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), x_den.get_mpz_t(), static_cast<unsigned long>(degree_));
    Rational value(acc, den * c_den);
    value.canonicalize();
    return value;
  }

  Form& operator+=(const Form& other) {
    require_same_degree(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Form& operator-=(const Form& other) {
    require_same_degree(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  Form& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
  }

  friend Form operator+(Form f, const Form& g) { return f += g; }
  friend Form operator-(Form f, const Form& g) { return f -= g; }
  friend Form operator*(const Rational& c, Form f) { return f *= c; }

  friend Form operator*(const Form& f, const Form& g) {
    Form h(f.degree_ + g.degree_);
    for (const auto& [ef, cf] : f.terms_) {
      for (const auto& [eg, cg] : g.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ef[i] + eg[i];
        h.add_term(e, cf * cg);
      }
    }
    return h;
  }

  friend bool operator==(const Form&, const Form&) = default;

  static int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

 private:
  void require_same_degree(const Form& other) const {
    if (degree_ != other.degree_) {
      throw InvalidInput("cannot combine forms of degree " + std::to_string(degree_) + " and " +
                         std::to_string(other.degree_));
    }
  }

  int degree_;
  Terms terms_;
};

template <std::size_t N>
Form<N> pow(const Form<N>& f, unsigned exponent) {
  Form<N> result = Form<N>::monomial(typename Form<N>::Exponent{});
  Form<N> base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// f / g when g divides f exactly. Uses the lex-leading term: if g | f then
/// LT(f) = LT(g) * LT(f/g), so a non-divisible leading term proves g does not
/// divide f.
template <std::size_t N>
std::optional<Form<N>> divide_exact(const Form<N>& f, const Form<N>& g) {
  if (g.is_zero()) throw InvalidInput("division by the zero form");
  if (g.degree() > f.degree()) return std::nullopt;
  Form<N> rem = f;
  Form<N> quot(f.degree() - g.degree());
  const auto& [lead_e, lead_c] = *g.terms().rbegin();
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms().rbegin();
    typename Form<N>::Exponent q{};
    for (std::size_t i = 0; i < N; ++i) {
      q[i] = e[i] - lead_e[i];
      if (q[i] < 0) return std::nullopt;
    }
    const Rational qc = c / lead_c;
    quot.add_term(q, qc);
    for (const auto& [eg, cg] : g.terms()) {
      typename Form<N>::Exponent m;
      for (std::size_t i = 0; i < N; ++i) m[i] = q[i] + eg[i];
      rem.add_term(m, -qc * cg);
    }
  }
  return quot;
}

using TernaryForm = Form<3>;
using QuaternaryForm = Form<4>;
using QuinaryForm = Form<5>;

}  // namespace bvfold
