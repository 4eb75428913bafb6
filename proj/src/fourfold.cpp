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

#include "bvfold/fourfold.hpp"

#include <sstream>
#include <string>
#include <utility>

#include "bvfold/errors.hpp"
#include "bvfold/linsys.hpp"

namespace bvfold::fourfold {

namespace {

int safe_valuation(const TernaryBiForm& p, const auto& divisor) {
  return p.is_zero() ? kInfiniteOrder : valuation(p, divisor);
}

std::string slice_name(const FiberStratum& s) {
  std::ostringstream os;
  os << "dP x {" << s.factor << " = 0}";
  return os.str();
}

template <std::size_t N>
void require_degree(const Form<N>& f, int degree, const char* name) {
  if (f.degree() != degree || f.is_zero()) {
    throw InvalidInput(std::string(name) + " must be a nonzero form of degree " + std::to_string(degree) +
                       ", got degree " + std::to_string(f.degree()));
  }
}

}  // namespace

FourfoldModel assemble(sextic::NodalSextic s, WeierstrassK3 k3) {
  const TernaryForm f2 = s.f6 * s.f6;
  const TernaryForm f3 = f2 * s.f6;
  TernaryBiForm AY = TernaryBiForm::tensor(f2, k3.A());
  TernaryBiForm BY = TernaryBiForm::tensor(f3, k3.B());
  if (AY.bidegree() != std::pair{12, 8} || BY.bidegree() != std::pair{18, 12}) {
    throw InvariantViolation("Weierstrass coefficients over P^2 x P^1 have the wrong bidegree");
  }
  return {std::move(s), std::move(k3), std::move(AY), std::move(BY)};
}

TernaryBiForm fourfold_discriminant(const FourfoldModel& model) {
  TernaryBiForm delta = Rational(4) * pow(model.AY, 3) + Rational(27) * pow(model.BY, 2);
  const TernaryBiForm expected = TernaryBiForm::tensor(pow(model.sextic.f6, 6), model.k3.discriminant());
  if (delta.bidegree() != std::pair{36, 24} || !(delta == expected)) {
    throw InvariantViolation("4 AY^3 + 27 BY^2 differs from f6^6 * Delta(pi)");
  }
  return delta;
}

std::vector<StratumReport> classify_strata(const FourfoldModel& model) {
  return classify_strata(model, fourfold_discriminant(model));
}

std::vector<StratumReport> classify_strata(const FourfoldModel& model, const TernaryBiForm& discriminant) {
  std::vector<StratumReport> out;
  out.push_back({StratumKind::Generic, "generic", std::nullopt, 0, std::array{0, 0, 0}, KodairaType::I(0),
                 std::nullopt});

  const TernaryForm& f6 = model.sextic.f6;
  const int a = safe_valuation(model.AY, f6);
  const int b = safe_valuation(model.BY, f6);
  const int d = safe_valuation(discriminant, f6);
  out.push_back({StratumKind::SexticCurve, "C x P^1", std::nullopt, 0, std::array{a, b, d},
                 classify_orders(a, b, d), std::nullopt});

  for (const auto& s : model.k3.inventory().strata) {
    const int sa = safe_valuation(model.AY, s.factor);
    const int sb = safe_valuation(model.BY, s.factor);
    const int sd = safe_valuation(discriminant, s.factor);
    out.push_back({StratumKind::DelPezzoSlice, slice_name(s), s.factor, s.point_count, std::array{sa, sb, sd},
                   classify_orders(sa, sb, sd), s.type});
  }
  for (const auto& s : model.k3.inventory().strata) {
    std::ostringstream name;
    name << "C x {" << s.factor << " = 0}";
    out.push_back({StratumKind::Intersection, name.str(), s.factor, s.point_count, std::nullopt, std::nullopt,
                   s.type});
  }
  return out;
}

bool flatness_flag(std::span<const StratumReport> strata) {
  for (const auto& s : strata) {
    if (s.kind == StratumKind::DelPezzoSlice && !(s.type && s.type->reduced())) return false;
  }
  return true;
}

std::vector<EquationRecord> emit_models(const FourfoldModel& model, const Auxiliary& aux) {
  std::vector<EquationRecord> out;
  out.push_back({"weierstrass",
                 "Y^2 = X^3 + A(t:s) f6(x0:x1:x2)^2 X + B(t:s) f6(x0:x1:x2)^3",
                 "P^2 x P^1",
                 {{"A", model.k3.A()}, {"B", model.k3.B()}, {"f6", model.sextic.f6}, {"AY", model.AY},
                  {"BY", model.BY}},
                 {"AY has bidegree (12,8) and BY has bidegree (18,12)"}});
  out.push_back({"double_cover",
                 "W^2 = f6(x0:x1:x2) z (x^3 + A(t:s) x z^2 + B(t:s) z^3)",
                 "P^2 x F4",
                 {{"A", model.k3.A()}, {"B", model.k3.B()}, {"f6", model.sextic.f6}},
                 {"branched over a divisor in |-2K| of P^2 x F4", "the linear system |(h+4F+2O)_Y|"}});

  const int n = model.sextic.node_count();
  if (const auto* six = std::get_if<AuxiliaryN6>(&aux)) {
    if (n != 6) throw InvalidInput("the cubic-surface model needs a 6-nodal sextic, got n = " + std::to_string(n));
    require_degree(six->g2, 2, "g2");
    require_degree(six->g3, 3, "g3");
    EquationRecord rec{"del_pezzo_n6",
                       "Y^2 = X^3 + A(t:s) g2(y0:y1:y2:y3)^2 X + B(t:s) g2(y0:y1:y2:y3)^3, g3(y0:y1:y2:y3) = 0",
                       "dP x P^1 inside P^3 x P^1",
                       {{"A", model.k3.A()}, {"B", model.k3.B()}, {"g2", six->g2}, {"g3", six->g3}},
                       {"dP is the cubic surface g3 = 0 in P^3"}};
    const ProjPoint1 origin(0, 1);
    if (eval(model.k3.A(), origin) == -3 && eval(model.k3.B(), origin) == 2 &&
        vanishing_order(model.k3.discriminant(), origin) == 5) {
      rec.notes.push_back("a0 = -3, b0 = 2: fibers over dP x {t = 0} are generically of type I5");
    }
    out.push_back(std::move(rec));
  } else if (const auto* five = std::get_if<AuxiliaryN5>(&aux)) {
    if (n != 5) throw InvalidInput("the quartic del Pezzo model needs a 5-nodal sextic, got n = " + std::to_string(n));
    require_degree(five->q2, 2, "q2");
    require_degree(five->q2p, 2, "q2'");
    require_degree(five->q2pp, 2, "q2''");
    out.push_back({"del_pezzo_n5",
                   "Y^2 = X^3 + A(t:s) q2''(y0:..:y4)^2 X + B(t:s) q2''(y0:..:y4)^3, q2'(y) = 0, q2(y) = 0",
                   "dP x P^1 inside P^4 x P^1",
                   {{"A", model.k3.A()},
                    {"B", model.k3.B()},
                    {"q2", five->q2},
                    {"q2'", five->q2p},
                    {"q2''", five->q2pp}},
                   {"dP is the complete intersection q2 = q2' = 0 in P^4"}});
  }
  return out;
}

std::vector<FibrationRow> fibration_inventory(const FourfoldModel& model) {
  using linsys::StandardDivisor;
  const int n = model.sextic.node_count();
  const int dim_h = linsys::delta_dims(linsys::standard_datum(StandardDivisor::h, n));
  const int dim_H = linsys::delta_dims(linsys::standard_datum(StandardDivisor::H, n));
  const int dim_F = linsys::delta_dims(linsys::standard_datum(StandardDivisor::F, n));
  const int dim_4F2O = linsys::delta_dims(linsys::standard_datum(StandardDivisor::FourFPlusTwoO, n));

  std::vector<FibrationRow> rows;
  rows.push_back({"E", "elliptic fibration", "elliptic curve", "dP x P^1 (model over P^2 x P^1)", dim_h + dim_F,
                  "(C x P^1) u (dP x Delta(pi))", std::nullopt, {"induced by (h+F)_Y"}});

  FibrationRow g{"G",
                 "isotrivial K3 fibration",
                 "S2",
                 "P^2",
                 dim_h,
                 "C",
                 std::nullopt,
                 {"induced by delta_h; delta_H gives the same fibration over P^" + std::to_string(dim_H)}};
  if (n == 6) g.notes.push_back("n = 6: the base dP is a cubic surface in P^3");
  if (n == 5) g.notes.push_back("n = 5: the base dP is an intersection of two quadrics in P^4");
  rows.push_back(std::move(g));

  rows.push_back({"H",
                  "Calabi-Yau threefold fibration",
                  "Borcea-Voisin threefold of S1 and an elliptic fiber of S2",
                  "P^1",
                  dim_F,
                  "Delta(pi)",
                  model.k3.inventory().point_count(),
                  {"induced by delta_F"}});
  rows.push_back({"delta_4F+2O", "isotrivial K3 fibration", "S1", "P^5", dim_4F2O, "trisection and negative curve",
                  std::nullopt, {"induced by delta_{4F+2O}"}});
  return rows;
}

}  // namespace bvfold::fourfold
