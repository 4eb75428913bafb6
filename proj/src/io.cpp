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

#include "bvfold/io.hpp"

#include <string>

#include "bvfold/errors.hpp"

namespace bvfold::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

int integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<Rational> rational_list(const Json& j, std::size_t expected, const char* name) {
  if (!j.is_array() || j.size() != expected) {
    throw InvalidInput(std::string("'") + name + "' must be a list of " + std::to_string(expected) + " rationals");
  }
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json record_form_json(const fourfold::RecordForm& f) {
  return std::visit([](const auto& x) { return to_json(x); }, f);
}

std::string stratum_kind(fourfold::StratumKind k) {
  switch (k) {
    case fourfold::StratumKind::Generic: return "generic";
    case fourfold::StratumKind::SexticCurve: return "sextic_curve";
    case fourfold::StratumKind::DelPezzoSlice: return "del_pezzo_slice";
    case fourfold::StratumKind::Intersection: return "intersection";
  }
  return "?";
}

Json order_json(int x) { return x >= kInfiniteOrder ? Json("inf") : Json(x); }

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw InvalidInput("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const BinaryForm& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
  return {{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

BinaryForm binary_form_from_json(const Json& j) {
  const int d = integer_field(j, "degree");
  if (d < 0) throw InvalidInput("negative degree");
  return BinaryForm(rational_list(field(j, "coeffs"), static_cast<std::size_t>(d) + 1, "coeffs"));
}

template <std::size_t N>
Form<N> form_from_json(const Json& j) {
  Form<N> f(integer_field(j, "degree"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InvalidInput("'terms' must be a list");
  for (const auto& t : terms) {
    const Json& exp = field(t, "exp");
    if (!exp.is_array() || exp.size() != N) {
      throw InvalidInput("exponent must list " + std::to_string(N) + " integers");
    }
    typename Form<N>::Exponent e{};
    for (std::size_t i = 0; i < N; ++i) {
      if (!exp[i].is_number_integer()) throw InvalidInput("exponent entries must be integers");
      e[i] = exp[i].get<int>();
    }
    f.add_term(e, rational_from_json(field(t, "c")));
  }
  return f;
}

template Form<3> form_from_json<3>(const Json&);
template Form<4> form_from_json<4>(const Json&);
template Form<5> form_from_json<5>(const Json&);

Json to_json(const TernaryBiForm& f) {
  const auto [d1, d2] = f.bidegree();
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    terms.push_back({{"exp", key.first}, {"bexp", {key.second, d2 - key.second}}, {"c", to_string(c)}});
  }
  return {{"bidegree", {d1, d2}}, {"terms", std::move(terms)}};
}

Json model_to_json(const WeierstrassK3& model) { return {{"A", to_json(model.A())}, {"B", to_json(model.B())}}; }

WeierstrassK3 model_from_json(const Json& j) {
  return make_model(binary_form_from_json(field(j, "A")), binary_form_from_json(field(j, "B")));
}

sextic::NodalSextic sextic_from_json(const Json& j) {
  TernaryForm f6 = form_from_json<3>(field(j, "f6"));
  std::vector<sextic::PlanePoint> nodes;
  const Json& list = field(j, "nodes");
  if (!list.is_array()) throw InvalidInput("'nodes' must be a list");
  for (const auto& p : list) {
    const auto coords = rational_list(p, 3, "node");
    nodes.push_back({coords[0], coords[1], coords[2]});
  }
  bool irreducible = false;
  if (j.contains("irreducible")) {
    if (!j["irreducible"].is_boolean()) throw InvalidInput("'irreducible' must be a boolean");
    irreducible = j["irreducible"].get<bool>();
  }
  return sextic::validate(std::move(f6), std::move(nodes), irreducible);
}

Json to_json(const sextic::NodalSextic& s) {
  Json nodes = Json::array();
  for (const auto& p : s.nodes) nodes.push_back({to_string(p[0]), to_string(p[1]), to_string(p[2])});
  return {{"f6", to_json(s.f6)},
          {"nodes", std::move(nodes)},
          {"n", s.node_count()},
          {"branch_genus", s.branch_genus()},
          {"del_pezzo_degree", s.del_pezzo_degree()},
          {"irreducible_attested", s.irreducible_attested},
          {"warnings", s.warnings}};
}

families::I5FamilyParams i5_params_from_json(const Json& j) {
  families::I5FamilyParams p;
  const auto a = rational_list(field(j, "a"), 7, "a");
  const auto b = rational_list(field(j, "b"), 8, "b");
  std::copy(a.begin(), a.end(), p.a.begin());
  std::copy(b.begin(), b.end(), p.b.begin());
  return p;
}

families::TorsionFamilyParams torsion_params_from_json(const Json& j) {
  return {rational_from_json(field(j, "p1")), rational_from_json(field(j, "p2"))};
}

fourfold::Auxiliary auxiliary_from_json(const Json& j) {
  const int variant = integer_field(j, "variant");
  if (variant == 6) return fourfold::AuxiliaryN6{form_from_json<4>(field(j, "g2")), form_from_json<4>(field(j, "g3"))};
  if (variant == 5) {
    return fourfold::AuxiliaryN5{form_from_json<5>(field(j, "q2")), form_from_json<5>(field(j, "q2p")),
                                 form_from_json<5>(field(j, "q2pp"))};
  }
  throw InvalidInput("auxiliary variant must be 5 or 6");
}

Json to_json(const KodairaType& t) { return t.name(); }

Json to_json(const FiberInventory& inventory) {
  Json strata = Json::array();
  for (const auto& s : inventory.strata) {
    strata.push_back({{"factor", to_json(s.factor)},
                      {"mult", s.ordDelta},
                      {"points", s.point_count},
                      {"ordA", order_json(s.ordA)},
                      {"ordB", order_json(s.ordB)},
                      {"ordDelta", s.ordDelta},
                      {"type", s.type.name()},
                      {"euler", s.type.euler()}});
  }
  return {{"strata", std::move(strata)}, {"euler_total", inventory.euler_total}};
}

Json to_json(const hodge::HodgeDiamond4& h) {
  return {{"h11", h.h11}, {"h21", h.h21}, {"h31", h.h31}, {"h22", h.h22}, {"euler", h.euler()}};
}

Json to_json(const linsys::FibrationTarget& target) {
  return {{"divisor", linsys::label(target.first) + "+" + linsys::label(target.second)},
          {"N", target.dims.N},
          {"M", target.dims.M},
          {"segre", {target.segre_a, target.segre_b}},
          {"map", target.map_class}};
}

Json to_json(const fourfold::StratumReport& s) {
  Json j{{"kind", stratum_kind(s.kind)}, {"name", s.name}};
  if (s.factor) j["factor"] = to_json(*s.factor);
  if (s.point_count > 0) j["points"] = s.point_count;
  if (s.orders) j["orders"] = {order_json((*s.orders)[0]), order_json((*s.orders)[1]), order_json((*s.orders)[2])};
  j["type"] = s.type ? Json(s.type->name()) : Json("unclassified");
  if (s.k3_type) j["k3_type"] = s.k3_type->name();
  return j;
}

Json to_json(const fourfold::EquationRecord& r) {
  Json forms = Json::object();
  for (const auto& [name, f] : r.forms) forms[name] = record_form_json(f);
  return {{"name", r.name}, {"equation", r.equation}, {"base", r.base}, {"forms", std::move(forms)}, {"notes", r.notes}};
}

Json to_json(const fourfold::FibrationRow& r) {
  Json j{{"name", r.name},   {"kind", r.kind}, {"fiber", r.fiber}, {"base", r.base}, {"base_dim", r.base_dim},
         {"discriminant", r.discriminant}};
  if (r.singular_points) j["singular_points"] = *r.singular_points;
  j["notes"] = r.notes;
  return j;
}

Json classify_report(const WeierstrassK3& model) {
  Json j{{"model", model_to_json(model)},
         {"discriminant", to_json(model.discriminant())},
         {"inventory", to_json(model.inventory())}};
  if (const auto m = i5_i1_count(model.inventory())) {
    j["configuration"] = {{"I5", *m}, {"I1", 24 - 5 * *m}};
    j["trisection_genus"] = genus_trisection(model);
    const auto [r, a] = involution_invariants_s2(model);
    j["involution"] = {{"r", r}, {"a", a}};
  }
  return j;
}

Json fourfold_report(const fourfold::FourfoldModel& model, const fourfold::Auxiliary& aux) {
  const TernaryBiForm delta = fourfold::fourfold_discriminant(model);
  const auto strata = fourfold::classify_strata(model, delta);

  Json records = Json::array();
  for (const auto& r : fourfold::emit_models(model, aux)) records.push_back(to_json(r));

  Json report;
  report["model"] = {{"sextic", to_json(model.sextic)},
                     {"k3", model_to_json(model.k3)},
                     {"bidegree_AY", {12, 8}},
                     {"bidegree_BY", {18, 12}},
                     {"equations", std::move(records)}};
  report["discriminant"] = {{"bidegree", {delta.bidegree().first, delta.bidegree().second}},
                            {"terms", delta.size()},
                            {"identity", "4 AY^3 + 27 BY^2 = f6^6 * Delta(pi)"},
                            {"identity_holds", true},
                            {"delta_pi", to_json(model.k3.discriminant())},
                            {"k3_inventory", to_json(model.k3.inventory())}};
  Json strata_json = Json::array();
  for (const auto& s : strata) strata_json.push_back(to_json(s));
  report["strata"] = std::move(strata_json);

  Json fibrations = Json::array();
  for (const auto& r : fourfold::fibration_inventory(model)) fibrations.push_back(to_json(r));

  report["flatness"] = {{"flat", fourfold::flatness_flag(strata)},
                        {"criterion", "every dP slice carries a reduced fiber type (I_n, II, III, IV)"}};
  report["fibrations"] = std::move(fibrations);

  Json notes = Json::array();
  const int n = model.sextic.node_count();
  if (const auto m = i5_i1_count(model.k3.inventory())) {
    const auto h = hodge::bv_hodge(n, *m);
    Json hj = to_json(h);
    hj["n"] = n;
    hj["m"] = *m;
    hj["matches_general_formula"] = hodge::cross_check(n, *m);
    report["hodge"] = std::move(hj);
  } else {
    notes.push_back("hodge numbers omitted: K3 fibers are not of the form m I5 + (24 - 5m) I1");
  }

  notes.push_back("codimension-two strata C x {q} are reported without a Kodaira type");
  notes.push_back("the involution on Y and its quotient (birational to P^2 x F4) are not modeled");
  notes.push_back(model.sextic.irreducible_attested ? "irreducibility of f6 attested by the input, not verified"
                                                    : "irreducibility of f6 not attested");
  for (const auto& w : model.sextic.warnings) notes.push_back("warning: " + w);
  report["notes"] = std::move(notes);
  return report;
}

}  // namespace bvfold::io
