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

#include <json.hpp>

#include "bvfold/binary_form.hpp"
#include "bvfold/bi_form.hpp"
#include "bvfold/families.hpp"
#include "bvfold/form.hpp"
#include "bvfold/fourfold.hpp"
#include "bvfold/hodge.hpp"
#include "bvfold/linsys.hpp"
#include "bvfold/sextic.hpp"
#include "bvfold/weierstrass.hpp"

/// Structured-text (JSON) encodings of forms, model files and reports.
/// Rationals are always strings "p" or "p/q"; integer JSON numbers are
/// accepted on input, floating-point numbers are not.
namespace bvfold::io {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);

Json to_json(const BinaryForm& f);
BinaryForm binary_form_from_json(const Json& j);

template <std::size_t N>
Json to_json(const Form<N>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"c", to_string(c)}});
  return {{"degree", f.degree()}, {"terms", std::move(terms)}};
}

template <std::size_t N>
Form<N> form_from_json(const Json& j);

extern template Form<3> form_from_json<3>(const Json&);
extern template Form<4> form_from_json<4>(const Json&);
extern template Form<5> form_from_json<5>(const Json&);

Json to_json(const TernaryBiForm& f);

/// { "A": form, "B": form }
Json model_to_json(const WeierstrassK3& model);
WeierstrassK3 model_from_json(const Json& j);

/// { "f6": form, "nodes": [["x0","x1","x2"], ...], "irreducible": bool }
sextic::NodalSextic sextic_from_json(const Json& j);
Json to_json(const sextic::NodalSextic& s);

/// { "a": [7 rationals], "b": [8 rationals] }
families::I5FamilyParams i5_params_from_json(const Json& j);
/// { "p1": rational, "p2": rational }
families::TorsionFamilyParams torsion_params_from_json(const Json& j);

/// { "variant": 6, "g2": form, "g3": form } or
/// { "variant": 5, "q2": form, "q2p": form, "q2pp": form }
fourfold::Auxiliary auxiliary_from_json(const Json& j);

Json to_json(const KodairaType& t);
Json to_json(const FiberInventory& inventory);
Json to_json(const hodge::HodgeDiamond4& h);
Json to_json(const linsys::FibrationTarget& target);
Json to_json(const fourfold::StratumReport& s);
Json to_json(const fourfold::EquationRecord& r);
Json to_json(const fourfold::FibrationRow& r);

/// Sections: model, discriminant, strata, flatness, fibrations, hodge (when
/// the fibers are m I5 + (24 - 5m) I1), notes.
Json fourfold_report(const fourfold::FourfoldModel& model, const fourfold::Auxiliary& aux = {});

/// Inventory plus trisection genus and involution invariants where defined.
Json classify_report(const WeierstrassK3& model);

}  // namespace bvfold::io
