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

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bvfold::lattice {

/// Named basis plus integral Gram matrix of an even lattice.
class NSLattice {
 public:
  NSLattice(std::vector<std::string> labels, std::vector<std::vector<long>> gram);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  long gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  long determinant() const;
  long pairing(const std::vector<long>& u, const std::vector<long>& v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<long>> gram_;
};

/// Neron-Severi lattice of the double plane branched along a sextic with n
/// nodes: h^2 = 2, R_i^2 = -2, all other products 0. Accepts 0 <= n <= 8.
std::shared_ptr<const NSLattice> s1_lattice(int n);

/// The hyperbolic plane spanned by the fiber F and the zero section O:
/// F^2 = 0, O^2 = -2, F.O = 1.
std::shared_ptr<const NSLattice> s2_lattice();

/// The ampleness argument for the strict transform H of the sextic needs
/// H^2 > 2, which fails at n = 8. Returns the caveat text when it applies.
std::optional<std::string> very_ample_caveat(int n);

class DivisorClass {
 public:
  DivisorClass(std::shared_ptr<const NSLattice> lattice, std::vector<long> coords);

  const NSLattice& lattice() const { return *lattice_; }
  const std::vector<long>& coords() const { return coords_; }

 private:
  std::shared_ptr<const NSLattice> lattice_;
  std::vector<long> coords_;
};

/// h, the pullback of a line.
DivisorClass pullback_of_line(int n);
/// H = 3h - sum R_i, the strict transform of the sextic.
DivisorClass sextic_strict_transform(int n);
DivisorClass fiber_class();
DivisorClass section_class();
/// 4F + 2O.
DivisorClass double_cover_class();

long self_intersection(const DivisorClass& d);

/// Arithmetic genus by adjunction on a K3: D^2/2 + 1. Rejects D^2 < -2.
int genus_on_k3(const DivisorClass& d);

/// Fixed-locus cases that (g, k) cannot describe.
enum class ExcludedCase { None, EmptyFixedLocus, TwoEllipticCurves };

/// Invariants of a non-symplectic involution: the invariant lattice has rank r
/// and discriminant group (Z/2)^a, and the fixed locus is a genus-g curve plus
/// k - 1 rational curves. delta is the parity invariant of the lattice; it only
/// matters to tell the two cases with (r, a) = (10, 8) apart.
struct InvolutionInvariants {
  int r = 0;
  int a = 0;
  int g = 0;
  int k = 0;
  int delta = 1;
  ExcludedCase excluded = ExcludedCase::None;

  friend bool operator==(const InvolutionInvariants&, const InvolutionInvariants&) = default;
};

/// (r, a) = (10 + k - g, 12 - k - g). Requires k >= 1, 1 <= r <= 20, 0 <= a <= r.
InvolutionInvariants gk_to_ra(int g, int k);

/// (g, k) = ((22 - r - a)/2, (r - a)/2 + 1). Requires r = a mod 2 and a <= r.
/// (10, 10) is flagged as the empty fixed locus; (10, 8) with delta = 0 as two
/// elliptic curves.
InvolutionInvariants ra_to_gk(int r, int a, int delta = 1);

}  // namespace bvfold::lattice
