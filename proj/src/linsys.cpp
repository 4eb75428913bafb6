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

#include "bvfold/linsys.hpp"

#include "bvfold/errors.hpp"
#include "bvfold/lattice.hpp"

namespace bvfold::linsys {

LinearSystemDatum::LinearSystemDatum(int genus, int invariant_dim) : genus_(genus), invariant_dim_(invariant_dim) {
  if (genus < 0) throw InvalidInput("genus must be non-negative");
  if (invariant_dim < -1 || invariant_dim > genus) {
    throw InvalidInput("invariant eigenspace dimension " + std::to_string(invariant_dim) + " outside -1.." +
                       std::to_string(genus));
  }
}

int h0_product(int g1, int g2) {
  if (g1 < 0 || g2 < 0) throw InvalidInput("genus must be non-negative");
  return (g1 + 1) * (g2 + 1);
}

DescentDims descent_dims(const LinearSystemDatum& d1, const LinearSystemDatum& d2) {
  const int inv1 = d1.invariant_dim() + 1;
  const int inv2 = d2.invariant_dim() + 1;
  const int anti1 = d1.anti_invariant_count();
  const int anti2 = d2.anti_invariant_count();
  return {inv1 * inv2 + anti1 * anti2 - 1, inv1 * anti2 + anti1 * inv2 - 1};
}

int delta_dims(const LinearSystemDatum& d) { return d.invariant_dim(); }

std::string label(StandardDivisor d) {
  switch (d) {
    case StandardDivisor::h: return "h";
    case StandardDivisor::H: return "H";
    case StandardDivisor::F: return "F";
    case StandardDivisor::FourFPlusTwoO: return "4F+2O";
  }
  return "?";
}

LinearSystemDatum standard_datum(StandardDivisor d, int n) {
  switch (d) {
    case StandardDivisor::h: {
      const int g = lattice::genus_on_k3(lattice::pullback_of_line(n));
      return {g, g};
    }
    case StandardDivisor::H: {
      const int g = lattice::genus_on_k3(lattice::sextic_strict_transform(n));
      return {g, g - 1};
    }
    case StandardDivisor::F: {
      const int g = lattice::genus_on_k3(lattice::fiber_class());
      return {g, g};
    }
    case StandardDivisor::FourFPlusTwoO: {
      const int g = lattice::genus_on_k3(lattice::double_cover_class());
      return {g, g};
    }
  }
  throw InvalidInput("unknown divisor");
}

std::vector<FibrationTarget> fibration_targets(int n) {
  using D = StandardDivisor;
  struct Row {
    D first;
    D second;
    const char* map_class;
  };
  const Row rows[] = {
      {D::h, D::F, "elliptic fibration over the Segre image of P^2 x P^1"},
      {D::H, D::F, "the same elliptic fibration, base dP x P^1 embedded by Segre"},
      {D::h, D::FourFPlusTwoO, "generically 2:1 onto its image"},
      {D::H, D::FourFPlusTwoO, "birational onto its image"},
  };
  std::vector<FibrationTarget> out;
  for (const auto& row : rows) {
    const auto d1 = standard_datum(row.first, n);
    const auto d2 = standard_datum(row.second, n);
    out.push_back({row.first, row.second, descent_dims(d1, d2), delta_dims(d1), delta_dims(d2), row.map_class});
  }
  return out;
}

}  // namespace bvfold::linsys
