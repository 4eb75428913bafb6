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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bvfold/bi_form.hpp"
#include "bvfold/form.hpp"
#include "bvfold/sextic.hpp"
#include "bvfold/weierstrass.hpp"

namespace bvfold::fourfold {

/// Weierstrass data of the elliptic fibration over P^2 x P^1:
/// Y^2 = X^3 + A(t:s) f6^2 X + B(t:s) f6^3.
struct FourfoldModel {
  sextic::NodalSextic sextic;
  WeierstrassK3 k3;
  /// A f6^2, bidegree (12, 8).
  TernaryBiForm AY;
  /// B f6^3, bidegree (18, 12).
  TernaryBiForm BY;
};

FourfoldModel assemble(sextic::NodalSextic s, WeierstrassK3 k3);

/// 4 AY^3 + 27 BY^2, checked against the product f6^6 * Delta(pi).
/// Throws InvariantViolation when the two disagree.
TernaryBiForm fourfold_discriminant(const FourfoldModel& model);

enum class StratumKind {
  Generic,        // away from the discriminant
  SexticCurve,    // C x P^1
  DelPezzoSlice,  // dP x {q} for q a singular point of the K3 fibration
  Intersection,   // C x {q}, codimension two
};

struct StratumReport {
  StratumKind kind = StratumKind::Generic;
  std::string name;
  /// Binary factor cutting out the points q (slices and intersections).
  std::optional<BinaryForm> factor;
  int point_count = 0;
  /// (ordA, ordB, ordDelta) along the stratum; absent in codimension two.
  std::optional<std::array<int, 3>> orders;
  /// Kodaira type at the generic point; absent in codimension two.
  std::optional<KodairaType> type;
  /// Fiber type of the K3 over q, attached to slices and intersections.
  std::optional<KodairaType> k3_type;
};

/// Orders are divisorial valuations of AY, BY and the discriminant along f6
/// and along each factor of Delta(pi), measured by exact division.
std::vector<StratumReport> classify_strata(const FourfoldModel& model, const TernaryBiForm& discriminant);
std::vector<StratumReport> classify_strata(const FourfoldModel& model);

/// True iff every dP slice has a reduced type (I_n, II, III, IV).
bool flatness_flag(std::span<const StratumReport> strata);

/// Auxiliary data for n = 6: dP is the cubic g3 = 0 in P^3 and the branch
/// curve is cut by the quadric g2.
struct AuxiliaryN6 {
  QuaternaryForm g2;
  QuaternaryForm g3;
};

/// Auxiliary data for n = 5: dP = {q2 = q2' = 0} in P^4, branch curve cut by q2''.
struct AuxiliaryN5 {
  QuinaryForm q2;
  QuinaryForm q2p;
  QuinaryForm q2pp;
};

using Auxiliary = std::variant<std::monostate, AuxiliaryN6, AuxiliaryN5>;

using RecordForm = std::variant<BinaryForm, TernaryForm, QuaternaryForm, QuinaryForm, TernaryBiForm>;

struct EquationRecord {
  std::string name;
  std::string equation;
  std::string base;
  std::vector<std::pair<std::string, RecordForm>> forms;
  std::vector<std::string> notes;
};

/// The Weierstrass record over P^2 x P^1, the double cover of P^2 x F4, and
/// optionally the n = 6 or n = 5 model over the embedded del Pezzo surface.
/// Throws InvalidInput when the auxiliary degrees are wrong or the node count
/// does not match the variant.
std::vector<EquationRecord> emit_models(const FourfoldModel& model, const Auxiliary& aux = {});

struct FibrationRow {
  std::string name;
  std::string kind;
  std::string fiber;
  std::string base;
  int base_dim = 0;
  std::string discriminant;
  /// Distinct singular points of the base curve, where that is meaningful.
  std::optional<int> singular_points;
  std::vector<std::string> notes;
};

/// The elliptic fibration E, the K3 fibrations G and delta_{4F+2O}, and the
/// Calabi-Yau threefold fibration H.
std::vector<FibrationRow> fibration_inventory(const FourfoldModel& model);

}  // namespace bvfold::fourfold
