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

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bvfold/errors.hpp"
#include "bvfold/io.hpp"

using bvfold::io::Json;

namespace {

enum ExitCode { kOk = 0, kInvalidInput = 2, kInvariantViolation = 3 };

bool pretty() {
  const char* v = std::getenv("BVFOLD_PRETTY");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

std::string render(const Json& j) { return pretty() ? j.dump(2) : j.dump(); }

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bvfold::InvalidInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw bvfold::InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  } catch (const Json::exception& e) {
    throw bvfold::InvalidInput(std::string("bad input: ") + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw bvfold::InvalidInput("cannot write '" + path + "'");
  out << render(j) << '\n';
}

Json error_json(const char* kind, const std::string& message) { return {{"error", kind}, {"message", message}}; }

// Runs a command body and maps exceptions onto exit codes. Output goes to
// `out`; diagnostics to `err`.
template <class F>
int guarded(F&& body, std::ostream& out, std::ostream& err) {
  try {
    out << render(body()) << '\n';
    return kOk;
  } catch (const bvfold::DegenerateModel& e) {
    err << render(error_json("degenerate", e.what())) << '\n';
  } catch (const bvfold::NonMinimalModel& e) {
    err << render(error_json("non_minimal", e.what())) << '\n';
  } catch (const bvfold::UnsupportedConfiguration& e) {
    err << render(error_json("unsupported", e.what())) << '\n';
  } catch (const bvfold::InvalidInput& e) {
    err << render(error_json("invalid_input", e.what())) << '\n';
  } catch (const Json::exception& e) {
    err << render(error_json("invalid_input", e.what())) << '\n';
  } catch (const bvfold::InvariantViolation& e) {
    err << render(error_json("invariant_violation", e.what())) << '\n';
    return kInvariantViolation;
  } catch (const std::exception& e) {
    err << render(error_json("internal", e.what())) << '\n';
    return kInvariantViolation;
  }
  return kInvalidInput;
}

Json hodge_command(const std::optional<int>& n, const std::optional<int>& m, const std::vector<int>& general) {
  namespace hodge = bvfold::hodge;
  if (!general.empty()) {
    if (n || m) throw bvfold::InvalidInput("--general excludes --n/--m");
    const auto h = hodge::dillies_hodge(general[0], general[1], general[2], general[3]);
    Json j = bvfold::io::to_json(h);
    j["invariants"] = {{"r1", general[0]}, {"a1", general[1]}, {"r2", general[2]}, {"a2", general[3]}};
    j["cy4_identity"] = h.satisfies_cy4_identity();
    return j;
  }
  if (!n || !m) throw bvfold::InvalidInput("hodge needs --n and --m, or --general r1 a1 r2 a2");
  const auto h = hodge::bv_hodge(*n, *m);
  Json j = bvfold::io::to_json(h);
  j["n"] = *n;
  j["m"] = *m;
  j["invariants"] = {{"r1", *n + 1}, {"a1", *n + 1}, {"r2", 2 + 2 * *m}, {"a2", 2 * *m}};
  j["matches_general_formula"] = hodge::cross_check(*n, *m);
  j["cy4_identity"] = h.satisfies_cy4_identity();
  return j;
}

Json family_report(const std::string& kind, Json params, const bvfold::WeierstrassK3& model) {
  Json j{{"family", kind}, {"params", std::move(params)}};
  Json report = bvfold::io::classify_report(model);
  for (auto& [k, v] : report.items()) j[k] = v;
  j["order_at_0_1"] = bvfold::vanishing_order(model.discriminant(), bvfold::ProjPoint1(0, 1));
  return j;
}

Json family_i5(const std::string& params_arg) {
  bvfold::families::I5FamilyParams p;
  if (params_arg != "zero") p = bvfold::io::i5_params_from_json(read_json(params_arg));
  Json params{{"a", Json::array()}, {"b", Json::array()}};
  for (const auto& x : p.a) params["a"].push_back(bvfold::to_string(x));
  for (const auto& x : p.b) params["b"].push_back(bvfold::to_string(x));
  return family_report("i5", std::move(params), bvfold::families::build_i5_family(p));
}

Json family_torsion(const std::string& p1, const std::string& p2) {
  const bvfold::families::TorsionFamilyParams p{bvfold::parse_rational(p1), bvfold::parse_rational(p2)};
  Json params{{"p1", bvfold::to_string(p.p1)}, {"p2", bvfold::to_string(p.p2)}};
  return family_report("torsion", std::move(params), bvfold::families::build_torsion_family(p));
}

Json classify_file(const std::string& path) {
  Json j{{"file", path}};
  const Json report = bvfold::io::classify_report(bvfold::io::model_from_json(read_json(path)));
  for (const auto& [k, v] : report.items()) j[k] = v;
  return j;
}

struct BatchResult {
  int code = kOk;
  std::string out;
  std::string err;
};

int classify_command(const std::vector<std::string>& files, unsigned jobs) {
  const auto run = [](const std::string& path) {
    std::ostringstream out, err;
    BatchResult r;
    r.code = guarded([&] { return classify_file(path); }, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
  };

  std::vector<BatchResult> results(files.size());
  jobs = std::max(1u, jobs);
  for (std::size_t start = 0; start < files.size(); start += jobs) {
    const std::size_t stop = std::min(files.size(), start + jobs);
    std::vector<std::future<BatchResult>> pending;
    for (std::size_t i = start; i < stop; ++i) pending.push_back(std::async(std::launch::async, run, files[i]));
    for (std::size_t i = start; i < stop; ++i) results[i] = pending[i - start].get();
  }

  int code = kOk;
  for (const auto& r : results) {
    std::cout << r.out;
    std::cerr << r.err;
    code = std::max(code, r.code);
  }
  return code;
}

Json fourfold_command(const std::string& sextic_path, const std::string& model_path, const std::string& aux_path) {
  auto s = bvfold::io::sextic_from_json(read_json(sextic_path));
  auto k3 = bvfold::io::model_from_json(read_json(model_path));
  bvfold::fourfold::Auxiliary aux;
  if (!aux_path.empty()) aux = bvfold::io::auxiliary_from_json(read_json(aux_path));
  return bvfold::io::fourfold_report(bvfold::fourfold::assemble(std::move(s), std::move(k3)), aux);
}

Json linsys_command(int n) {
  if (n < 0 || n > 8) throw bvfold::InvalidInput("n must lie in 0..8, got " + std::to_string(n));
  namespace ls = bvfold::linsys;
  Json data = Json::object();
  for (auto d : {ls::StandardDivisor::h, ls::StandardDivisor::H, ls::StandardDivisor::F,
                 ls::StandardDivisor::FourFPlusTwoO}) {
    const auto datum = ls::standard_datum(d, n);
    data[ls::label(d)] = {{"genus", datum.genus()}, {"invariant_dim", datum.invariant_dim()},
                          {"delta_dim", ls::delta_dims(datum)}};
  }
  Json targets = Json::array();
  for (const auto& t : ls::fibration_targets(n)) targets.push_back(bvfold::io::to_json(t));
  Json j{{"n", n}, {"data", std::move(data)}, {"targets", std::move(targets)}};
  if (const auto caveat = bvfold::lattice::very_ample_caveat(n)) j["caveat"] = *caveat;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions for Borcea-Voisin fourfolds fibered over P^2 x P^1"};
  app.require_subcommand(1);

  std::optional<int> hodge_n, hodge_m;
  std::vector<int> general;
  auto* hodge = app.add_subcommand("hodge", "Hodge numbers of the fourfold");
  hodge->add_option("--n", hodge_n, "Nodes of the branch sextic (0..8)");
  hodge->add_option("--m", hodge_m, "Number of I5 fibers (0..4)");
  hodge->add_option("--general", general, "Invariants r1 a1 r2 a2 of the two involutions")->expected(4);

  std::string params = "zero", p1, p2, out_path;
  auto* family = app.add_subcommand("family", "Build an elliptic K3 with prescribed I5 fibers");
  family->require_subcommand(1);
  auto* i5 = family->add_subcommand("i5", "One I5 fiber at (0:1)");
  i5->add_option("--params", params, "'zero' or a parameter file {\"a\": [7], \"b\": [8]}");
  i5->add_option("--out", out_path, "Write the model file here");
  auto* torsion = family->add_subcommand("torsion", "Four I5 fibers by quadratic base change");
  torsion->add_option("--p1", p1, "First branch value")->required();
  torsion->add_option("--p2", p2, "Second branch value")->required();
  torsion->add_option("--out", out_path, "Write the model file here");

  std::vector<std::string> model_files;
  unsigned jobs = 1;
  auto* classify = app.add_subcommand("classify", "Singular fibers of Weierstrass model files");
  classify->add_option("files", model_files, "Model files {\"A\": form, \"B\": form}")->required();
  classify->add_option("--jobs", jobs, "Files processed concurrently")->check(CLI::PositiveNumber);

  std::string sextic_path, model_path, aux_path;
  auto* fourfold = app.add_subcommand("fourfold", "Full report for a sextic and a K3 model");
  fourfold->add_option("sextic", sextic_path, "Sextic file")->required();
  fourfold->add_option("model", model_path, "Model file")->required();
  fourfold->add_option("--aux", aux_path, "Auxiliary del Pezzo forms");

  int linsys_n = 0;
  auto* linsys = app.add_subcommand("linsys", "Projective model dimensions");
  linsys->add_option("--n", linsys_n, "Nodes of the branch sextic")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  if (*hodge) return guarded([&] { return hodge_command(hodge_n, hodge_m, general); }, std::cout, std::cerr);
  if (*i5 || *torsion) {
    return guarded(
        [&] {
          Json j = *i5 ? family_i5(params) : family_torsion(p1, p2);
          if (!out_path.empty()) write_json(out_path, j["model"]);
          return j;
        },
        std::cout, std::cerr);
  }
  if (*classify) return classify_command(model_files, jobs);
  if (*fourfold) return guarded([&] { return fourfold_command(sextic_path, model_path, aux_path); }, std::cout, std::cerr);
  if (*linsys) return guarded([&] { return linsys_command(linsys_n); }, std::cout, std::cerr);
  return kInvalidInput;
}
