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

#include <string>
#include <vector>

namespace bvfold::linsys {

/// A divisor class on a K3 seen through its linear system: genus g (so
/// h^0 = g + 1) and the projective dimension h of the invariant eigenspace.
class LinearSystemDatum {
 public:
  /// Requires g >= 0 and -1 <= h <= g.
  LinearSystemDatum(int genus, int invariant_dim);

  int genus() const { return genus_; }
  int invariant_dim() const { return invariant_dim_; }
  /// Dimension of the anti-invariant eigenspace, g - h.
  int anti_invariant_count() const { return genus_ - invariant_dim_; }

  friend bool operator==(const LinearSystemDatum&, const LinearSystemDatum&) = default;

 private:
  int genus_;
  int invariant_dim_;
};

/// (g1 + 1)(g2 + 1): sections of D1 + D2 on the product.
int h0_product(int g1, int g2);

/// Projective dimensions of |D_Y| (N) and |D_Y - L| (M) on the quotient. Either
/// may be -1, meaning the system is empty.
struct DescentDims {
  int N = 0;
  int M = 0;

  friend bool operator==(const DescentDims&, const DescentDims&) = default;
};

DescentDims descent_dims(const LinearSystemDatum& d1, const LinearSystemDatum& d2);

/// Dimension of |delta_D| on the quotient for a divisor pulled back from one factor.
int delta_dims(const LinearSystemDatum& d);

enum class StandardDivisor { h, H, F, FourFPlusTwoO };

std::string label(StandardDivisor d);

/// Genus from the lattice module; invariant dimension from how the involution
/// acts on sections: trivially for h, F, 4F + 2O, and with one anti-invariant
/// section for H = 3h - sum R_i.
LinearSystemDatum standard_datum(StandardDivisor d, int n);

struct FibrationTarget {
  StandardDivisor first;
  StandardDivisor second;
  /// Target P^N of the map induced on the quotient.
  DescentDims dims;
  /// The Segre factors P^a x P^b whose image contains the image.
  int segre_a = 0;
  int segre_b = 0;
  std::string map_class;
};

/// The four product divisors h + F, H + F, h + (4F + 2O), H + (4F + 2O), for
/// 0 <= n <= 8.
std::vector<FibrationTarget> fibration_targets(int n);

}  // namespace bvfold::linsys
