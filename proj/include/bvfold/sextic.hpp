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
#include <span>
#include <string>
#include <vector>

#include "bvfold/form.hpp"
#include "bvfold/rational.hpp"

namespace bvfold::sextic {

using PlanePoint = std::array<Rational, 3>;

/// Scales so the first nonzero coordinate is 1. Throws on (0:0:0).
PlanePoint normalize(const PlanePoint& p);

/// A plane sextic whose listed points are ordinary double points.
struct NodalSextic {
  TernaryForm f6;
  std::vector<PlanePoint> nodes;
  /// The caller's claim that f6 is irreducible; not verified.
  bool irreducible_attested = false;
  /// Non-fatal findings: collinear triples, six nodes on a conic, n = 8.
  std::vector<std::string> warnings;

  int node_count() const { return static_cast<int>(nodes.size()); }
  /// Genus of the strict transform of the sextic, 10 - n.
  int branch_genus() const { return 10 - node_count(); }
  /// Degree 9 - n of the del Pezzo surface obtained by blowing up the nodes.
  int del_pezzo_degree() const { return 9 - node_count(); }
};

/// Checks degree 6, 0 <= n <= 8, distinct nodes, and at each node
/// f6 = 0, grad f6 = 0, Hessian of rank 2. Throws InvalidInput naming the
/// failing node and clause.
NodalSextic validate(TernaryForm f6, std::vector<PlanePoint> nodes, bool irreducible_attested = false);

/// 10 - n for 0 <= n <= 8.
int genus_branch(int n);

/// Rank of the Hessian of f at p.
std::size_t hessian_rank(const TernaryForm& f, const PlanePoint& p);

/// Basis of the sextics singular at every given point.
std::vector<TernaryForm> sextics_singular_at(std::span<const PlanePoint> points);

/// sum weights[i] * basis[i] over sextics_singular_at(points). Extra weights
/// are ignored, missing ones count as zero. The result is rescaled to
/// coprime integer coefficients with a positive leading term.
TernaryForm sextic_singular_at(std::span<const PlanePoint> points, std::span<const Rational> weights);

}  // namespace bvfold::sextic
