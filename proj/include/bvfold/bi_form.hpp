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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bvfold/binary_form.hpp"
#include "bvfold/errors.hpp"
#include "bvfold/form.hpp"
#include "bvfold/rational.hpp"

namespace bvfold {

/// Bihomogeneous form on P^(N-1) x P^1: degree d1 in the base variables
/// x_0..x_{N-1} and degree d2 in (t, s).
///
/// A key is (x-exponent, t-exponent); the s-exponent is d2 minus the
/// t-exponent.
template <std::size_t N>
class BiForm {
 public:
  using BaseExponent = std::array<int, N>;
  using Key = std::pair<BaseExponent, int>;
  using Terms = std::map<Key, Rational>;

  BiForm(int d1, int d2) : d1_(d1), d2_(d2) {
    if (d1 < 0 || d2 < 0) throw InvalidInput("negative bidegree");
  }

  /// g(x) * f(t, s).
  static BiForm tensor(const Form<N>& g, const BinaryForm& f) {
    BiForm out(g.degree(), f.degree());
    for (const auto& [e, c] : g.terms()) {
      for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) != 0) out.add_term(e, i, c * f.coeff(i));
      }
    }
    return out;
  }

  std::pair<int, int> bidegree() const { return {d1_, d2_}; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const BaseExponent& e, int t_exp, const Rational& c) {
    if (Form<N>::total(e) != d1_ || t_exp < 0 || t_exp > d2_) {
      throw InvalidInput("term does not match bidegree (" + std::to_string(d1_) + "," +
                         std::to_string(d2_) + ")");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{e, t_exp}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational eval(std::span<const Rational, N> x, const Rational& t, const Rational& s) const {
    // Bihomogeneous, so both groups of variables can be cleared of denominators.
    const auto [xs, x_den] = over_common_denominator(x);
    const std::array<Rational, 2> ts_in{t, s};
    const auto [ts, ts_den] = over_common_denominator(ts_in);
    std::array<std::vector<Integer>, N> powers;
    for (std::size_t i = 0; i < N; ++i) powers[i] = power_table(xs[i], d1_);
    const auto t_pow = power_table(ts[0], d2_), s_pow = power_table(ts[1], d2_);
    const auto [cs, c_den] = integer_numerators();
    Integer acc = 0, term;
    std::size_t k = 0;
    for (const auto& [key, c] : terms_) {
      term = cs[k++];
      for (std::size_t i = 0; i < N; ++i) term *= powers[i][static_cast<std::size_t>(key.first[i])];
      term *= t_pow[static_cast<std::size_t>(key.second)];
      term *= s_pow[static_cast<std::size_t>(d2_ - key.second)];
      acc += term;
    }
    Integer den_x, den_ts;
    mpz_pow_ui(den_x.get_mpz_t(), x_den.get_mpz_t(), static_cast<unsigned long>(d1_));
    mpz_pow_ui(den_ts.get_mpz_t(), ts_den.get_mpz_t(), static_cast<unsigned long>(d2_));
    Rational value(acc, den_x * den_ts * c_den);
    value.canonicalize();
    return value;
  }

  /// Coefficient of x^e as a binary form in (t, s).
  BinaryForm binary_coefficient(const BaseExponent& e) const {
    BinaryForm f(d2_);
    for (int i = 0; i <= d2_; ++i) {
      auto it = terms_.find(Key{e, i});
      if (it != terms_.end()) f += BinaryForm::monomial(i, d2_ - i, it->second);
    }
    return f;
  }

  /// Coefficient of t^i s^(d2-i) as a form in the base variables.
  Form<N> base_coefficient(int t_exp) const {
    Form<N> g(d1_);
    for (const auto& [key, c] : terms_) {
      if (key.second == t_exp) g.add_term(key.first, c);
    }
    return g;
  }

  BiForm& operator+=(const BiForm& other) {
    require_same_bidegree(other);
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
  }

  BiForm& operator-=(const BiForm& other) {
    require_same_bidegree(other);
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
    return *this;
  }

  BiForm& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, x] : terms_) x *= c;
    return *this;
  }

  friend BiForm operator+(BiForm f, const BiForm& g) { return f += g; }
  friend BiForm operator-(BiForm f, const BiForm& g) { return f -= g; }
  friend BiForm operator*(const Rational& c, BiForm f) { return f *= c; }

  /// Product. Coefficients are brought to a common denominator and the
  /// integer numerators accumulated into a dense array indexed by the
  /// exponent of the result.
  friend BiForm operator*(const BiForm& f, const BiForm& g) {
    const int D1 = f.d1_ + g.d1_;
    const int D2 = f.d2_ + g.d2_;
    BiForm h(D1, D2);
    if (f.is_zero() || g.is_zero()) return h;

    const auto [f_num, f_den] = f.integer_numerators();
    const auto [g_num, g_den] = g.integer_numerators();

    const std::size_t base = static_cast<std::size_t>(D1) + 1;
    auto code = [base](const BaseExponent& e) {
      std::size_t c = 0;
      for (std::size_t i = N - 1; i-- > 0;) c = c * base + static_cast<std::size_t>(e[i]);
      return c;
    };
    std::size_t cells = 1;
    for (std::size_t i = 0; i + 1 < N; ++i) cells *= base;
    const std::size_t stride = static_cast<std::size_t>(D2) + 1;
    std::vector<Integer> acc(cells * stride);
    std::vector<char> used(acc.size(), 0);

    struct Packed {
      std::size_t code;
      int t_exp;
      const Integer* num;
    };
    auto pack = [&](const BiForm& p, const std::vector<Integer>& nums) {
      std::vector<Packed> out;
      out.reserve(p.terms_.size());
      std::size_t k = 0;
      for (const auto& [key, c] : p.terms_) out.push_back({code(key.first), key.second, &nums[k++]});
      return out;
    };
    const auto fp = pack(f, f_num);
    const auto gp = pack(g, g_num);
    for (const auto& a : fp) {
      for (const auto& b : gp) {
        const std::size_t idx = (a.code + b.code) * stride + static_cast<std::size_t>(a.t_exp + b.t_exp);
        mpz_addmul(acc[idx].get_mpz_t(), a.num->get_mpz_t(), b.num->get_mpz_t());
        used[idx] = 1;
      }
    }

    const Integer den = f_den * g_den;
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
      if (!used[idx] || acc[idx] == 0) continue;
      std::size_t c = idx / stride;
      const int t_exp = static_cast<int>(idx % stride);
      BaseExponent e{};
      int rest = D1;
      for (std::size_t i = 0; i + 1 < N; ++i) {
        e[i] = static_cast<int>(c % base);
        c /= base;
        rest -= e[i];
      }
      e[N - 1] = rest;
      Rational q(acc[idx], den);
      q.canonicalize();
      h.terms_.emplace(Key{e, t_exp}, std::move(q));
    }
    return h;
  }

  friend bool operator==(const BiForm&, const BiForm&) = default;

 private:
  void require_same_bidegree(const BiForm& other) const {
    if (d1_ != other.d1_ || d2_ != other.d2_) throw InvalidInput("bidegree mismatch");
  }

  // Numerators over the lcm of all denominators, in map order.
  std::pair<std::vector<Integer>, Integer> integer_numerators() const {
    Integer den = 1;
    for (const auto& [key, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> nums;
    nums.reserve(terms_.size());
    for (const auto& [key, c] : terms_) nums.push_back(c.get_num() * (den / c.get_den()));
    return {std::move(nums), den};
  }

  int d1_;
  int d2_;
  Terms terms_;
};

template <std::size_t N>
BiForm<N> pow(const BiForm<N>& f, unsigned exponent) {
  BiForm<N> result(0, 0);
  result.add_term(typename BiForm<N>::BaseExponent{}, 0, 1);
  BiForm<N> base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// P / g for a binary form g, when g divides every coefficient of P.
template <std::size_t N>
std::optional<BiForm<N>> divide_exact(const BiForm<N>& p, const BinaryForm& g) {
  const auto [d1, d2] = p.bidegree();
  if (g.degree() > d2) return std::nullopt;
  BiForm<N> out(d1, d2 - g.degree());
  std::map<typename BiForm<N>::BaseExponent, bool> seen;
  for (const auto& [key, c] : p.terms()) {
    if (!seen.emplace(key.first, true).second) continue;
    auto q = divide_exact(p.binary_coefficient(key.first), g);
    if (!q) return std::nullopt;
    for (int i = 0; i <= q->degree(); ++i) out.add_term(key.first, i, q->coeff(i));
  }
  return out;
}

/// P / g for a base form g, when g divides every coefficient of P.
template <std::size_t N>
std::optional<BiForm<N>> divide_exact(const BiForm<N>& p, const Form<N>& g) {
  const auto [d1, d2] = p.bidegree();
  if (g.degree() > d1) return std::nullopt;
  BiForm<N> out(d1 - g.degree(), d2);
  for (int i = 0; i <= d2; ++i) {
    Form<N> coeff = p.base_coefficient(i);
    if (coeff.is_zero()) continue;
    auto q = divide_exact(coeff, g);
    if (!q) return std::nullopt;
    for (const auto& [e, c] : q->terms()) out.add_term(e, i, c);
  }
  return out;
}

/// Number of times `divisor` divides P. P must be nonzero and the divisor of
/// positive degree.
template <std::size_t N, class Divisor>
int valuation(const BiForm<N>& p, const Divisor& divisor) {
  if (p.is_zero()) throw InvalidInput("valuation of the zero form is undefined");
  if (divisor.degree() <= 0) throw InvalidInput("valuation along a constant");
  // The valuation is the least one over the coefficients in the other factor,
  // so each coefficient is only divided as often as the running minimum allows.
  const auto [d1, d2] = p.bidegree();
  std::vector<std::conditional_t<std::is_same_v<Divisor, BinaryForm>, BinaryForm, Form<N>>> coeffs;
  int best;
  if constexpr (std::is_same_v<Divisor, BinaryForm>) {
    std::set<typename BiForm<N>::BaseExponent> seen;
    for (const auto& [key, c] : p.terms()) {
      if (seen.insert(key.first).second) coeffs.push_back(p.binary_coefficient(key.first));
    }
    best = d2 / divisor.degree();
  } else {
    for (int i = 0; i <= d2; ++i) {
      auto c = p.base_coefficient(i);
      if (!c.is_zero()) coeffs.push_back(std::move(c));
    }
    best = d1 / divisor.degree();
  }
  for (auto& c : coeffs) {
    int k = 0;
    while (k < best) {
      auto q = divide_exact(c, divisor);
      if (!q) break;
      c = std::move(*q);
      ++k;
    }
    best = k;
    if (best == 0) break;
  }
  return best;
}

using TernaryBiForm = BiForm<3>;

}  // namespace bvfold
