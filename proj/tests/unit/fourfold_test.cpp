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

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bvfold/errors.hpp"
#include "bvfold/families.hpp"
#include "bvfold/fourfold.hpp"
#include "support.hpp"

using namespace bvfold;
using namespace bvfold::fourfold;
using bvfold::testing::random_rational;
using bvfold::testing::Rng;

namespace {

TernaryForm term(int i, int j, int k, Rational c = 1) { return TernaryForm::monomial({i, j, k}, std::move(c)); }

// sum c_i t^i s^(d-i) at the given coordinates, without normalizing.
Rational raw_eval(const BinaryForm& f, const Rational& t, const Rational& s) {
  Rational acc = 0;
  for (int i = f.degree(); i >= 0; --i) {
    Rational sp = 1;
    for (int k = 0; k < f.degree() - i; ++k) sp *= s;
    Rational tp = 1;
    for (int k = 0; k < i; ++k) tp *= t;
    acc += f.coeff(i) * tp * sp;
  }
  return acc;
}

sextic::NodalSextic six_nodal() {
  const std::vector<sextic::PlanePoint> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {2, -1, 5}};
  const std::vector<Rational> w{3, -1, 2, 0, 1, -2, 5, 1, -1, 4};
  return sextic::validate(sextic::sextic_singular_at(pts, w), pts, true);
}

sextic::NodalSextic five_nodal() {
  const std::vector<sextic::PlanePoint> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}};
  std::vector<Rational> w(sextic::sextics_singular_at(pts).size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = Rational(static_cast<long>(i % 5) - 2);
  return sextic::validate(sextic::sextic_singular_at(pts, w), pts, true);
}

sextic::NodalSextic fermat() { return sextic::validate(term(6, 0, 0) + term(0, 6, 0) + term(0, 0, 6), {}); }

WeierstrassK3 generic_k3() {
  return make_model(BinaryForm({1, 0, -2, 1, 0, 3, 0, 1, -1}), BinaryForm({2, 1, 0, -1, 0, 0, 5, 0, 1, 0, 0, -3, 1}));
}

// Orders (2,3,6) at (0:1).
WeierstrassK3 star_k3() {
  return make_model(BinaryForm({0, 0, 1, 2, 0, -1, 3, 0, 1}), BinaryForm({0, 0, 0, 1, 0, 2, -1, 0, 1, 3, 0, 1, 2}));
}

const FourfoldModel& flagship() {
  static const FourfoldModel model = assemble(six_nodal(), families::build_torsion_family({2, 3}));
  return model;
}

std::map<std::string, int> slice_types(const std::vector<StratumReport>& strata) {
  std::map<std::string, int> out;
  for (const auto& s : strata) {
    if (s.kind == StratumKind::DelPezzoSlice) out[s.type->name()] += s.point_count;
  }
  return out;
}

std::map<std::string, int> inventory_types(const WeierstrassK3& k3) {
  std::map<std::string, int> out;
  for (const auto& s : k3.inventory().strata) out[s.type.name()] += s.point_count;
  return out;
}

const StratumReport& find(const std::vector<StratumReport>& strata, StratumKind kind) {
  for (const auto& s : strata) {
    if (s.kind == kind) return s;
  }
  throw std::logic_error("stratum kind missing");
}

QuaternaryForm quaternary(int degree, Rng& rng) { return bvfold::testing::random_ternary_like<4>(rng, degree, 4); }
QuinaryForm quinary(int degree, Rng& rng) { return bvfold::testing::random_ternary_like<5>(rng, degree, 4); }

}  // namespace

TEST_CASE("assembly") {
  const auto& m = flagship();
  CHECK(m.AY.bidegree() == std::pair{12, 8});
  CHECK(m.BY.bidegree() == std::pair{18, 12});
  const std::array<Rational, 3> x{2, -1, 3};
  const Rational f = m.sextic.f6.eval(x);
  REQUIRE(f != 0);
  for (int k = -2; k <= 2; ++k) {
    const Rational t = k, s = Rational(1, 2);
    CHECK(m.AY.eval(x, t, s) == f * f * raw_eval(m.k3.A(), t, s));
    CHECK(m.BY.eval(x, t, s) == f * f * f * raw_eval(m.k3.B(), t, s));
  }
}

TEST_CASE("discriminant identity and evaluation oracle") {
  const auto& m = flagship();
  const TernaryBiForm disc = fourfold_discriminant(m);
  CHECK(disc.bidegree() == std::pair{36, 24});
  Rng rng(51);
  for (int k = 0; k < 50; ++k) {
    const std::array<Rational, 3> x{random_rational(rng), random_rational(rng), random_rational(rng)};
    const Rational t = random_rational(rng), s = random_rational(rng);
    const Rational a = m.AY.eval(x, t, s), b = m.BY.eval(x, t, s);
    const Rational f = m.sextic.f6.eval(x);
    CHECK(disc.eval(x, t, s) == 4 * a * a * a + 27 * b * b);
    CHECK(disc.eval(x, t, s) == f * f * f * f * f * f * raw_eval(m.k3.discriminant(), t, s));
  }
}

TEST_CASE("broken model trips the identity") {
  FourfoldModel m = flagship();
  m.AY += TernaryBiForm::tensor(term(12, 0, 0), BinaryForm::monomial(8, 0));
  CHECK_THROWS_AS(fourfold_discriminant(m), InvariantViolation);
}

TEST_CASE("strata of the flagship model") {
  const auto strata = classify_strata(flagship());
  const auto& generic = find(strata, StratumKind::Generic);
  CHECK(*generic.type == KodairaType::I(0));
  const auto& curve = find(strata, StratumKind::SexticCurve);
  CHECK(*curve.orders == std::array<int, 3>{2, 3, 6});
  CHECK(*curve.type == KodairaType::IStar(0));
  CHECK(slice_types(strata) == std::map<std::string, int>{{"I1", 4}, {"I5", 4}});
  for (const auto& s : strata) {
    if (s.kind == StratumKind::DelPezzoSlice) CHECK(*s.type == *s.k3_type);
    if (s.kind == StratumKind::Intersection) {
      CHECK_FALSE(s.type.has_value());
      CHECK(s.k3_type.has_value());
    }
  }
  CHECK(flatness_flag(strata));
}

TEST_CASE("strata of a generic model") {
  const auto strata = classify_strata(assemble(fermat(), generic_k3()));
  CHECK(*find(strata, StratumKind::SexticCurve).type == KodairaType::IStar(0));
  CHECK(slice_types(strata) == std::map<std::string, int>{{"I1", 24}});
  CHECK(flatness_flag(strata));
}

TEST_CASE("a non-reduced K3 fiber breaks flatness") {
  const auto k3 = star_k3();
  const auto strata = classify_strata(assemble(fermat(), k3));
  CHECK(slice_types(strata) == inventory_types(k3));
  CHECK(slice_types(strata).count("I0*") == 1);
  CHECK_FALSE(flatness_flag(strata));
}

TEST_CASE("model emission") {
  const auto records = emit_models(flagship());
  REQUIRE(records.size() == 2);
  CHECK(records[0].name == "weierstrass");
  CHECK(records[1].name == "double_cover");
  CHECK(records[1].equation.find("W^2") != std::string::npos);

  Rng rng(52);
  const AuxiliaryN6 good{quaternary(2, rng), quaternary(3, rng)};
  const auto with_aux = emit_models(flagship(), good);
  REQUIRE(with_aux.size() == 3);
  CHECK(with_aux[2].name == "del_pezzo_n6");
  CHECK_THROWS_AS(emit_models(flagship(), AuxiliaryN6{quaternary(2, rng), quaternary(2, rng)}), InvalidInput);
  CHECK_THROWS_AS(emit_models(flagship(), AuxiliaryN5{quinary(2, rng), quinary(2, rng), quinary(2, rng)}),
                  InvalidInput);

  const auto five = assemble(five_nodal(), generic_k3());
  const auto n5 = emit_models(five, AuxiliaryN5{quinary(2, rng), quinary(2, rng), quinary(2, rng)});
  CHECK(n5.back().name == "del_pezzo_n5");
  CHECK_THROWS_AS(emit_models(five, AuxiliaryN5{quinary(2, rng), quinary(3, rng), quinary(2, rng)}), InvalidInput);
}

TEST_CASE("the n = 6 record flags an I5 fiber at t = 0") {
  families::I5FamilyParams p;
  p.a = {1, 2, -1, 3, 0, 1, 2};
  p.b = {1, 0, 2, -1, 1, 0, 3, 1};
  Rng rng(53);
  const auto model = assemble(six_nodal(), families::build_i5_family(p));
  const auto records = emit_models(model, AuxiliaryN6{quaternary(2, rng), quaternary(3, rng)});
  const auto& notes = records.back().notes;
  CHECK(std::any_of(notes.begin(), notes.end(), [](const std::string& n) { return n.find("I5") != std::string::npos; }));
}

TEST_CASE("fibration inventory") {
  const auto rows = fibration_inventory(flagship());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].base_dim == 3);
  CHECK(rows[1].base_dim == 2);
  CHECK(rows[2].base_dim == 1);
  CHECK(rows[3].base_dim == 5);
  CHECK(rows[2].singular_points == 8);
  CHECK(std::any_of(rows[1].notes.begin(), rows[1].notes.end(),
                    [](const std::string& n) { return n.find("cubic surface") != std::string::npos; }));
}
