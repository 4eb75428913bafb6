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

#include "bvfold/lattice.hpp"

#include <utility>

#include "bvfold/errors.hpp"
#include "bvfold/matrix.hpp"

namespace bvfold::lattice {

NSLattice::NSLattice(std::vector<std::string> labels, std::vector<std::vector<long>> gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  const std::size_t n = labels_.size();
  if (gram_.size() != n) throw InvalidInput("Gram matrix size does not match the basis");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw InvalidInput("Gram matrix is not square");
    if (gram_[i][i] % 2 != 0) throw InvalidInput("Gram matrix has an odd diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw InvalidInput("Gram matrix is not symmetric");
    }
  }
}

long NSLattice::determinant() const {
  RationalMatrix m(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = gram_[i][j];
  }
  return m.determinant().get_num().get_si();
}

long NSLattice::pairing(const std::vector<long>& u, const std::vector<long>& v) const {
  if (u.size() != rank() || v.size() != rank()) throw InvalidInput("coordinate vector has the wrong length");
  long sum = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) sum += u[i] * gram_[i][j] * v[j];
  }
  return sum;
}

std::shared_ptr<const NSLattice> s1_lattice(int n) {
  if (n < 0 || n > 8) throw InvalidInput("node count must lie in 0..8, got " + std::to_string(n));
  std::vector<std::string> labels{"h"};
  for (int i = 1; i <= n; ++i) labels.push_back("R" + std::to_string(i));
  const std::size_t rank = labels.size();
  std::vector<std::vector<long>> gram(rank, std::vector<long>(rank, 0));
  gram[0][0] = 2;
  for (std::size_t i = 1; i < rank; ++i) gram[i][i] = -2;
  return std::make_shared<const NSLattice>(std::move(labels), std::move(gram));
}

std::shared_ptr<const NSLattice> s2_lattice() {
  static const auto lattice =
      std::make_shared<const NSLattice>(std::vector<std::string>{"F", "O"},
                                        std::vector<std::vector<long>>{{0, 1}, {1, -2}});
  return lattice;
}

std::optional<std::string> very_ample_caveat(int n) {
  if (n == 8) {
    return "n = 8: H^2 = 2, so the argument that phi_|H| is birational onto its image does not apply";
  }
  return std::nullopt;
}

DivisorClass::DivisorClass(std::shared_ptr<const NSLattice> lattice, std::vector<long> coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) throw InvalidInput("divisor class without a lattice");
  if (coords_.size() != lattice_->rank()) throw InvalidInput("coordinate vector has the wrong length");
}

DivisorClass pullback_of_line(int n) {
  auto lat = s1_lattice(n);
  std::vector<long> c(lat->rank(), 0);
  c[0] = 1;
  return {std::move(lat), std::move(c)};
}

DivisorClass sextic_strict_transform(int n) {
  auto lat = s1_lattice(n);
  std::vector<long> c(lat->rank(), -1);
  c[0] = 3;
  return {std::move(lat), std::move(c)};
}

DivisorClass fiber_class() { return {s2_lattice(), {1, 0}}; }
DivisorClass section_class() { return {s2_lattice(), {0, 1}}; }
DivisorClass double_cover_class() { return {s2_lattice(), {4, 2}}; }

long self_intersection(const DivisorClass& d) { return d.lattice().pairing(d.coords(), d.coords()); }

int genus_on_k3(const DivisorClass& d) {
  const long sq = self_intersection(d);
  if (sq % 2 != 0) throw InvariantViolation("odd self-intersection in an even lattice");
  if (sq < -2) throw InvalidInput("self-intersection " + std::to_string(sq) + " < -2 has no genus");
  return static_cast<int>(sq / 2 + 1);
}

InvolutionInvariants gk_to_ra(int g, int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  const int r = 10 + k - g;
  const int a = 12 - k - g;
  if (r < 1 || r > 20 || a < 0 || a > r) {
    throw InvalidInput("(g, k) = (" + std::to_string(g) + ", " + std::to_string(k) +
                       ") gives inadmissible (r, a) = (" + std::to_string(r) + ", " + std::to_string(a) + ")");
  }
  return {r, a, g, k, 1, ExcludedCase::None};
}

InvolutionInvariants ra_to_gk(int r, int a, int delta) {
  if ((r - a) % 2 != 0) throw InvalidInput("r and a must have the same parity");
  if (a > r) throw InvalidInput("a cannot exceed r");
  if (delta != 0 && delta != 1) throw InvalidInput("delta is 0 or 1");
  InvolutionInvariants inv{r, a, (22 - r - a) / 2, (r - a) / 2 + 1, delta, ExcludedCase::None};
  if (r == 10 && a == 10) inv.excluded = ExcludedCase::EmptyFixedLocus;
  if (r == 10 && a == 8 && delta == 0) inv.excluded = ExcludedCase::TwoEllipticCurves;
  return inv;
}

}  // namespace bvfold::lattice
