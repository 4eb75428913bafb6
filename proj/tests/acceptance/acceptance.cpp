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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bvfold/errors.hpp"
#include "bvfold/families.hpp"
#include "bvfold/fourfold.hpp"
#include "bvfold/hodge.hpp"
#include "bvfold/lattice.hpp"
#include "bvfold/linsys.hpp"
#include "bvfold/sextic.hpp"
#include "models.hpp"

using namespace bvfold;
using bvfold::testing::random_nonzero;
using bvfold::testing::random_rational;
using bvfold::testing::Rng;
using bvfold::testing::uniform;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "first failure: " << what << "; ";
    pass = pass && cond;
  }
};

Outcome hodge_grid() {
  Outcome o;
  int matches = 0;
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const bool ok = hodge::bv_hodge(n, m) == hodge::dillies_hodge(n + 1, n + 1, 2 + 2 * m, 2 * m);
      o.require(ok, "(n,m) = (" + std::to_string(n) + "," + std::to_string(m) + ")");
      matches += ok;
    }
  }
  o.require(matches == 45, "match count");
  o.detail << matches << "/45 exact matches";
  return o;
}

Outcome cy4_identity() {
  Outcome o;
  int holds = 0;
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const auto h = hodge::bv_hodge(n, m);
      const bool ok = h.h22 == 2 * (22 + 2 * h.h11 + 2 * h.h31 - h.h21);
      o.require(ok, "(n,m) = (" + std::to_string(n) + "," + std::to_string(m) + ")");
      holds += ok;
    }
  }
  o.detail << holds << "/45 exact";
  return o;
}

Outcome i5_family(Rng& rng) {
  Outcome o;
  int exact = 0, degenerate = 0;
  for (int trial = 0; trial < 200; ++trial) {
    families::I5FamilyParams p;
    for (auto& x : p.a) x = random_rational(rng);
    for (auto& x : p.b) x = random_rational(rng);
    try {
      const auto model = families::build_i5_family(p);
      const ProjPoint1 origin(0, 1);
      const int order = vanishing_order(model.discriminant(), origin);
      o.require(order >= 5, "order below 5");
      o.require(eval(model.A(), origin) == -3 && eval(model.B(), origin) == 2, "a0 = -3, b0 = 2");
      KodairaType type;
      int with_origin = 0;
      for (const auto& s : model.inventory().strata) {
        if (eval(s.factor, origin) == 0) {
          type = s.type;
          ++with_origin;
        }
      }
      o.require(with_origin == 1, "one stratum through (0:1)");
      o.require(order == 5 && type == KodairaType::I(5), "order exactly 5 and type I5");
      exact += order == 5 && type == KodairaType::I(5);
    } catch (const InvalidInput&) {
      ++degenerate;
    }
  }
  o.detail << exact << "/" << 200 - degenerate << " non-degenerate trials with an I5 fiber of order 5";
  return o;
}

Outcome torsion_family(Rng& rng) {
  Outcome o;
  int admissible = 0, rejected = 0;
  while (admissible < 20) {
    const families::TorsionFamilyParams p{random_rational(rng), random_nonzero(rng)};
    try {
      const auto model = families::build_torsion_family(p);
      ++admissible;
      const auto& inv = model.inventory();
      o.require(inv.count(KodairaType::I(5)) == 4 && inv.count(KodairaType::I(1)) == 4 && inv.point_count() == 8,
                "4 I5 + 4 I1 at (" + to_string(p.p1) + ", " + to_string(p.p2) + ")");
      o.require(inv.euler_total == 24, "Euler total 24");
      o.require(genus_trisection(model) == 2, "trisection genus 2");
    } catch (const InvalidInput&) {
      ++rejected;
    }
  }
  o.detail << admissible << " admissible pairs (" << rejected << " rejected draws)";
  return o;
}

sextic::NodalSextic random_sextic(Rng& rng, int n) {
  std::vector<sextic::PlanePoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    const auto p = sextic::normalize({uniform(rng, -4, 4), uniform(rng, -4, 4), uniform(rng, 1, 3)});
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  for (;;) {
    const auto basis = sextic::sextics_singular_at(pts);
    std::vector<Rational> w;
    for (std::size_t i = 0; i < basis.size(); ++i) w.push_back(uniform(rng, -3, 3));
    try {
      return sextic::validate(sextic::sextic_singular_at(pts, w), pts, true);
    } catch (const InvalidInput&) {
    }
  }
}

sextic::NodalSextic flagship_sextic() {
  const std::vector<sextic::PlanePoint> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {2, -1, 5}};
  const std::vector<Rational> w{3, -1, 2, 0, 1, -2, 5, 1, -1, 4};
  return sextic::validate(sextic::sextic_singular_at(pts, w), pts, true);
}

std::vector<fourfold::FourfoldModel> fourfold_models(Rng& rng) {
  std::vector<fourfold::FourfoldModel> out;
  out.push_back(fourfold::assemble(flagship_sextic(), families::build_torsion_family({2, 3})));
  while (out.size() < 20) {
    auto k3 = bvfold::testing::random_minimal_model(rng);
    if (!k3) continue;
    out.push_back(fourfold::assemble(random_sextic(rng, uniform(rng, 0, 8)), std::move(*k3)));
  }
  return out;
}

Rational raw_eval(const BinaryForm& f, const Rational& t, const Rational& s) {
  Rational acc = 0, tp = 1;
  std::vector<Rational> sp(static_cast<std::size_t>(f.degree()) + 1, Rational(1));
  for (std::size_t k = 1; k < sp.size(); ++k) sp[k] = sp[k - 1] * s;
  for (int i = 0; i <= f.degree(); ++i) {
    acc += f.coeff(i) * tp * sp[static_cast<std::size_t>(f.degree() - i)];
    tp *= t;
  }
  return acc;
}

Outcome fourfold_discriminants(const std::vector<fourfold::FourfoldModel>& models,
                               std::vector<TernaryBiForm>& discriminants, Rng& rng) {
  Outcome o;
  int identities = 0;
  for (const auto& m : models) {
    try {
      discriminants.push_back(fourfold::fourfold_discriminant(m));
      const auto& d = discriminants.back();
      o.require(d.bidegree() == std::pair{36, 24}, "bidegree (36,24)");
      ++identities;
      for (int k = 0; k < 50; ++k) {
        const std::array<Rational, 3> x{random_rational(rng), random_rational(rng), random_rational(rng)};
        const Rational t = random_rational(rng), s = random_rational(rng);
        Rational f6 = m.sextic.f6.eval(x), f6_6 = 1;
        for (int e = 0; e < 6; ++e) f6_6 *= f6;
        o.require(d.eval(x, t, s) == f6_6 * raw_eval(m.k3.discriminant(), t, s), "evaluation oracle");
      }
    } catch (const InvariantViolation& e) {
      discriminants.emplace_back(36, 24);
      o.require(false, e.what());
    }
  }
  o.detail << identities << "/" << models.size() << " exact identities (first: 6-node sextic + torsion model), "
           << 50 * models.size() << " point evaluations";
  return o;
}

Outcome stratified_types(const std::vector<fourfold::FourfoldModel>& models,
                         const std::vector<TernaryBiForm>& discriminants) {
  Outcome o;
  int flat = 0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto strata = fourfold::classify_strata(models[i], discriminants[i]);
    std::map<std::string, int> slices, k3;
    bool all_reduced = true;
    for (const auto& s : strata) {
      if (s.kind == fourfold::StratumKind::SexticCurve) {
        o.require(s.orders == std::array<int, 3>{2, 3, 6} && s.type == KodairaType::IStar(0), "f6 stratum is I0*");
      }
      if (s.kind == fourfold::StratumKind::DelPezzoSlice) {
        slices[s.type->name()] += s.point_count;
        all_reduced = all_reduced && s.type->reduced();
      }
    }
    for (const auto& s : models[i].k3.inventory().strata) k3[s.type.name()] += s.point_count;
    o.require(slices == k3, "dP types equal the K3 inventory");
    const bool flag = fourfold::flatness_flag(strata);
    o.require(flag == all_reduced, "flatness iff reduced");
    flat += flag;
  }
  o.detail << models.size() << " models, " << flat << " flat, " << models.size() - flat << " with non-reduced slices";
  return o;
}

Outcome projective_dimensions() {
  Outcome o;
  for (int n = 0; n <= 8; ++n) {
    std::vector<int> dims;
    for (const auto& t : linsys::fibration_targets(n)) {
      dims.push_back(t.dims.N);
      const auto d1 = linsys::standard_datum(t.first, n), d2 = linsys::standard_datum(t.second, n);
      o.require((t.dims.N + 1) + (t.dims.M + 1) == (d1.genus() + 1) * (d2.genus() + 1), "eigenspace partition");
    }
    o.require(dims == std::vector<int>{5, 19 - 2 * n, 17, 59 - 6 * n}, "targets at n = " + std::to_string(n));
  }
  o.detail << "n = 0..8";
  return o;
}

Outcome dictionary_roundtrip() {
  Outcome o;
  int pairs = 0;
  for (int r = 1; r <= 20; ++r) {
    for (int a = r % 2; a <= r; a += 2) {
      const auto inv = lattice::ra_to_gk(r, a);
      const auto back = lattice::gk_to_ra(inv.g, inv.k);
      o.require(back.r == r && back.a == a, "roundtrip (" + std::to_string(r) + "," + std::to_string(a) + ")");
      ++pairs;
    }
  }
  for (int n = 0; n <= 8; ++n) {
    const auto inv = lattice::gk_to_ra(10 - n, 1);
    o.require(inv.r == 1 + n && inv.a == 1 + n, "(10-n, 1)");
  }
  for (int m = 0; m <= 4; ++m) {
    const auto inv = lattice::gk_to_ra(10 - 2 * m, 2);
    o.require(inv.r == 2 + 2 * m && inv.a == 2 * m, "(10-2m, 2)");
  }
  o.detail << pairs << " parity-valid (r,a) pairs";
  return o;
}

Outcome euler_bookkeeping(Rng& rng) {
  Outcome o;
  int built = 0, rejected = 0;
  std::map<std::string, int> types;
  while (built < 500) {
    const auto model = bvfold::testing::random_minimal_model(rng);
    if (!model) {
      ++rejected;
      continue;
    }
    ++built;
    const auto& inv = model->inventory();
    int euler = 0;
    bool only_i5 = !inv.strata.empty();
    for (const auto& s : inv.strata) {
      euler += s.point_count * s.type.euler();
      only_i5 = only_i5 && s.type == KodairaType::I(5);
      types[s.type.name()] += 1;
    }
    o.require(euler == 24 && inv.euler_total == 24, "Euler sum 24");
    o.require(!only_i5, "a model with only I5 fibers");
  }
  o.detail << built << " minimal models (" << rejected << " rejected draws), " << types.size() << " fiber types seen";
  return o;
}

}  // namespace

int main() {
  Rng rng(20261018);
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;

  const auto report = [&](int id, const char* title, const std::function<Outcome()>& run) {
    const auto begun = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "threw: " << e.what();
    }
    failures += !o.pass;
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - begun).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << o.detail.str() << " ("
              << std::fixed << std::setprecision(1) << took << " s)" << std::endl;
  };

  std::vector<fourfold::FourfoldModel> models;
  std::vector<TernaryBiForm> discriminants;

  report(1, "Hodge grid", hodge_grid);
  report(2, "CY4 identity", cy4_identity);
  report(3, "one-I5 family", [&] { return i5_family(rng); });
  report(4, "torsion family", [&] { return torsion_family(rng); });
  report(5, "fourfold discriminant", [&] {
    models = fourfold_models(rng);
    return fourfold_discriminants(models, discriminants, rng);
  });
  report(6, "stratified types", [&] {
    if (models.size() != discriminants.size() || models.empty()) throw std::runtime_error("no models from [5]");
    return stratified_types(models, discriminants);
  });
  report(7, "projective dimensions", projective_dimensions);
  report(8, "dictionary roundtrip", dictionary_roundtrip);
  report(9, "Euler bookkeeping", [&] { return euler_bookkeeping(rng); });

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (seconds < 60 ? "PASS" : "FAIL") << " [time] total " << seconds << " s (limit 60 s)" << std::endl;
  failures += seconds >= 60;
  return failures == 0 ? 0 : 1;
}
