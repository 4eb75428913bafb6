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

#include "bvfold/weierstrass.hpp"

#include <algorithm>
#include <sstream>

#include "bvfold/errors.hpp"

namespace bvfold {

namespace {

std::string triple(int a, int b, int d) {
  auto show = [](int x) { return x >= kInfiniteOrder ? std::string("inf") : std::to_string(x); };
  return "(" + show(a) + ", " + show(b) + ", " + show(d) + ")";
}

struct RawStratum {
  BinaryForm factor;
  int ordA;
  int ordB;
  int ordDelta;
};

int order_at_infinity(const BinaryForm& f) { return f.is_zero() ? kInfiniteOrder : f.s_power(); }

// Splits a squarefree factor g (no root at (1:0)) into pieces on which the
// order of f is constant.
std::vector<std::pair<BinaryForm, int>> split_by_order(const BinaryForm& g, const BinaryForm& f) {
  if (f.is_zero()) return {{g, kInfiniteOrder}};
  std::vector<std::pair<BinaryForm, int>> parts;
  BinaryForm current = g;
  BinaryForm rest_of_f = f;
  for (int k = 0;; ++k) {
    BinaryForm h = gcd(current, rest_of_f);
    auto exact = divide_exact(current, h);
    if (!exact) throw InvariantViolation("gcd does not divide its argument");
    if (exact->degree() > 0) parts.emplace_back(exact->monic(), k);
    if (h.degree() == 0) break;
    current = h;
    auto reduced = divide_exact(rest_of_f, h);
    if (!reduced) throw InvariantViolation("gcd does not divide its argument");
    rest_of_f = std::move(*reduced);
  }
  return parts;
}

std::vector<RawStratum> refine(const BinaryForm& A, const BinaryForm& B, const BinaryForm& delta) {
  std::vector<RawStratum> out;
  for (const auto& [factor, mult] : squarefree_stratify(delta).factors) {
    if (factor == BinaryForm::s()) {
      out.push_back({factor, order_at_infinity(A), order_at_infinity(B), mult});
      continue;
    }
    for (const auto& [ga, oa] : split_by_order(factor, A)) {
      for (const auto& [gb, ob] : split_by_order(ga, B)) out.push_back({gb, oa, ob, mult});
    }
  }
  return out;
}

}  // namespace

int KodairaType::euler() const {
  switch (family) {
    case Family::I: return n;
    case Family::II: return 2;
    case Family::III: return 3;
    case Family::IV: return 4;
    case Family::IStar: return n + 6;
    case Family::IVStar: return 8;
    case Family::IIIStar: return 9;
    case Family::IIStar: return 10;
  }
  return 0;
}

bool KodairaType::reduced() const {
  return family == Family::I || family == Family::II || family == Family::III || family == Family::IV;
}

std::string KodairaType::name() const {
  switch (family) {
    case Family::I: return "I" + std::to_string(n);
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::IStar: return "I" + std::to_string(n) + "*";
    case Family::IVStar: return "IV*";
    case Family::IIIStar: return "III*";
    case Family::IIStar: return "II*";
  }
  return "?";
}

KodairaType classify_orders(int a, int b, int d) {
  using F = KodairaType::Family;
  if (a < 0 || b < 0 || d < 0) throw InvariantViolation("negative order in " + triple(a, b, d));
  if (a >= 4 && b >= 6) throw NonMinimalModel("non-minimal order triple " + triple(a, b, d));
  if (d == 0 && (a == 0 || b == 0)) return KodairaType::I(0);
  if (a == 0 && b == 0) return KodairaType::I(d);
  if (a >= 1 && b == 1 && d == 2) return {F::II, 0};
  if (a == 1 && b >= 2 && d == 3) return {F::III, 0};
  if (a >= 2 && b == 2 && d == 4) return {F::IV, 0};
  if (a >= 2 && b >= 3 && d == 6) return KodairaType::IStar(0);
  if (a == 2 && b == 3 && d > 6) return KodairaType::IStar(d - 6);
  if (a >= 3 && b == 4 && d == 8) return {F::IVStar, 0};
  if (a == 3 && b >= 5 && d == 9) return {F::IIIStar, 0};
  if (a >= 4 && b == 5 && d == 10) return {F::IIStar, 0};
  throw InvariantViolation("order triple (ordA, ordB, ordDelta) = " + triple(a, b, d) +
                           " matches no Kodaira type");
}

int FiberInventory::count(const KodairaType& type) const {
  int total = 0;
  for (const auto& s : strata) {
    if (s.type == type) total += s.point_count;
  }
  return total;
}

int FiberInventory::point_count() const {
  int total = 0;
  for (const auto& s : strata) total += s.point_count;
  return total;
}

FiberInventory fiber_inventory(const BinaryForm& A, const BinaryForm& B) {
  const BinaryForm delta = discriminant(A, B);
  FiberInventory inv;
  for (auto& raw : refine(A, B, delta)) {
    if (raw.ordA >= 4 && raw.ordB >= 6) {
      std::ostringstream msg;
      msg << "non-minimal model: orders " << triple(raw.ordA, raw.ordB, raw.ordDelta) << " at the roots of "
          << raw.factor;
      throw NonMinimalModel(msg.str());
    }
    const int points = raw.factor.degree();
    KodairaType type = classify_orders(raw.ordA, raw.ordB, raw.ordDelta);
    inv.strata.push_back({std::move(raw.factor), points, raw.ordA, raw.ordB, raw.ordDelta, type});
  }
  std::sort(inv.strata.begin(), inv.strata.end(),
            [](const FiberStratum& x, const FiberStratum& y) { return canonical_less(x.factor, y.factor); });
  for (const auto& s : inv.strata) inv.euler_total += s.point_count * s.type.euler();
  if (inv.euler_total != delta.degree()) {
    throw InvariantViolation("Euler numbers sum to " + std::to_string(inv.euler_total) +
                             " but the discriminant has degree " + std::to_string(delta.degree()));
  }
  return inv;
}

WeierstrassK3 make_model(BinaryForm A, BinaryForm B) {
  if (A.degree() != 8 || B.degree() != 12) {
    throw InvalidInput("a K3 Weierstrass model needs deg A = 8 and deg B = 12; got (" +
                       std::to_string(A.degree()) + ", " + std::to_string(B.degree()) + ")");
  }
  WeierstrassK3 model;
  model.delta_ = discriminant(A, B);
  model.inventory_ = fiber_inventory(A, B);
  model.A_ = std::move(A);
  model.B_ = std::move(B);
  return model;
}

const FiberInventory& fiber_inventory(const WeierstrassK3& model) { return model.inventory(); }

int genus_trisection(const WeierstrassK3& model) {
  const auto& inv = model.inventory();
  for (const auto& s : inv.strata) {
    if (!s.type.multiplicative() || s.type.n % 2 == 0) {
      throw UnsupportedConfiguration("trisection genus needs only I_n fibers with n odd; found " +
                                     s.type.name());
    }
  }
  const int branch_points = inv.point_count();
  // 2g - 2 = 3 * (-2) + branch_points
  const int twice_g = branch_points - 4;
  if (twice_g < 0 || twice_g % 2 != 0) {
    throw InvariantViolation("branch point count " + std::to_string(branch_points) + " gives no integral genus");
  }
  return twice_g / 2;
}

std::optional<int> i5_i1_count(const FiberInventory& inventory) {
  const int m = inventory.count(KodairaType::I(5));
  const int ones = inventory.count(KodairaType::I(1));
  if (m > 4 || m + ones != inventory.point_count() || ones != 24 - 5 * m) return std::nullopt;
  return m;
}

std::pair<int, int> involution_invariants_s2(const WeierstrassK3& model) {
  const auto m = i5_i1_count(model.inventory());
  if (!m) throw UnsupportedConfiguration("fibers are not of the form m I5 + (24 - 5m) I1");
  return {2 + 2 * *m, 2 * *m};
}

}  // namespace bvfold
