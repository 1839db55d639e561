// Copyright 2026 The affmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: builds maps, checks their properties, samples
// domains, reconstructs maps from probe data and writes the figure presets.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "affmap/domains.hpp"
#include "affmap/errors.hpp"
#include "affmap/io.hpp"
#include "affmap/maps.hpp"
#include "affmap/presets.hpp"
#include "affmap/qubit2.hpp"
#include "affmap/tomography.hpp"

namespace {

using affmap::ComplexMatrix;
using affmap::JointStateCoeffs;
using affmap::RealVector;
using affmap::io::Json;
namespace q2 = affmap::qubit2;

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitNumerical = 4;

struct RunConfig {
  std::string gamma;
  std::string spec_file;
  std::string map_file;
  std::string unitary_file;
  std::string pairs_file;
  std::string rotations_file;
  std::string state_file;
  std::string bloch;
  std::string base;
  std::string section;
  std::string family = "random_unitary";
  std::string target;  // example family or preset name
  std::string out;
  std::optional<int> resolution;
  int random_count = 0;
  int trials = 1000;
  std::uint64_t seed = 0;
  double tol = affmap::kDefaultTol;
  double eps = affmap::kDefaultProbeStep;
};

RealVector parse_list(const std::string& text, int expected, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw affmap::ValidationError(std::string(flag) + ": bad number '" +
                                    item + "'");
    }
  }
  if (expected > 0 && static_cast<int>(values.size()) != expected) {
    throw affmap::ValidationError(std::string(flag) + ": expected " +
                                  std::to_string(expected) + " values");
  }
  return Eigen::Map<RealVector>(values.data(),
                                static_cast<Eigen::Index>(values.size()));
}

q2::IntHamParams gamma_of(const RunConfig& c) {
  const RealVector g = parse_list(c.gamma, 3, "--gamma");
  return {{g(0), g(1), g(2)}};
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out);
  if (!out) throw affmap::ValidationError("cannot write " + c.out);
  out << text;
}

void emit_json(const RunConfig& c, const Json& j) {
  emit(c, affmap::io::dump(j));
}

void require_flag(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw affmap::ValidationError(std::string(flag) + " is required");
  }
}

JointStateCoeffs load_spec(const RunConfig& c) {
  require_flag(c.spec_file, "--spec");
  return affmap::io::spec_from_json(affmap::io::read_json_file(c.spec_file));
}

affmap::AffineMap load_map(const RunConfig& c) {
  require_flag(c.map_file, "--map");
  return affmap::io::map_from_json(affmap::io::read_json_file(c.map_file));
}

/// Joint state from --spec: either a fully fixed coefficient spec or an
/// object {"pi": matrix}.
ComplexMatrix load_joint_state(const RunConfig& c, const affmap::ProductBasis& pb) {
  require_flag(c.spec_file, "--spec");
  const Json j = affmap::io::read_json_file(c.spec_file);
  ComplexMatrix pi;
  if (j.is_object() && j.contains("pi")) {
    pi = affmap::io::complex_matrix_from_json(j.at("pi"));
  } else {
    const JointStateCoeffs spec = affmap::io::spec_from_json(j);
    if (spec.n != pb.n() || spec.m != pb.m()) {
      throw affmap::DimensionError("--spec dimensions do not match the unitary");
    }
    pi = affmap::reconstruct_state(spec, pb);
  }
  if (pi.rows() != pb.dim() || pi.cols() != pb.dim()) {
    throw affmap::DimensionError("joint state dimension does not match the unitary");
  }
  affmap::require_density_matrix(pi, 1e-8, "joint state");
  return pi;
}

/// Subsystem state from --bloch or --state; I/N when neither is given.
ComplexMatrix load_state(const RunConfig& c, const affmap::AffineMap& map) {
  if (!c.bloch.empty()) {
    const RealVector a = parse_list(c.bloch, map.n() * map.n() - 1, "--bloch");
    return affmap::state_from_bloch(a, map.basis_s());
  }
  if (!c.state_file.empty()) {
    const Json j = affmap::io::read_json_file(c.state_file);
    return affmap::io::complex_matrix_from_json(
        j.is_object() ? j.at("rho") : j);
  }
  return affmap::identity(map.n()) / static_cast<double>(map.n());
}

Json properties(const affmap::AffineMap& map) {
  const bool k_zero = map.k().cwiseAbs().maxCoeff() <= 1e-12;
  return {{"trace_k", affmap::io::to_json(map.k().trace())},
          {"is_cp", affmap::choi_and_cp(map).is_cp},
          {"purity_theorem_side",
           k_zero ? "k_zero_purity_nonincreasing"
                  : "k_nonzero_purity_increases_at_maximally_mixed"}};
}

/// Two-qubit state used by the examples when no --spec is given:
/// Π = ¼(I + 0.3 ξ1 + 0.4 σ1ξ1 + 0.2 σ2ξ3).
JointStateCoeffs default_example_spec() {
  JointStateCoeffs c = JointStateCoeffs::zeros(2, 2);
  c.coeff(0, 1) = 0.3;
  c.coeff(1, 1) = 0.4;
  c.coeff(2, 3) = 0.2;
  return c;
}

/// Unitary from --gamma, or from --unitary holding a matrix or an object
/// {"u": matrix, "n": N} (N defaults to 2).
int cmd_extract(const RunConfig& c) {
  ComplexMatrix u;
  int n = 2;
  if (!c.gamma.empty()) {
    u = q2::int_ham_unitary(gamma_of(c));
  } else {
    require_flag(c.unitary_file, "--unitary or --gamma");
    const Json j = affmap::io::read_json_file(c.unitary_file);
    if (j.is_object()) {
      u = affmap::io::complex_matrix_from_json(j.at("u"));
      n = j.value("n", 2);
    } else {
      u = affmap::io::complex_matrix_from_json(j);
    }
  }
  if (n < 2 || u.rows() % n != 0) {
    throw affmap::DimensionError("unitary dimension is not a multiple of n");
  }
  const affmap::ProductBasis pb(n, static_cast<int>(u.rows()) / n);
  const ComplexMatrix pi = load_joint_state(c, pb);
  const affmap::AffineMap map = affmap::map_from_unitary(u, pi, pb, c.tol);
  Json out = affmap::io::map_to_json(map);
  out["properties"] = properties(map);
  emit_json(c, out);
  return 0;
}

int cmd_apply(const RunConfig& c) {
  const affmap::AffineMap map = load_map(c);
  const ComplexMatrix rho = load_state(c, map);
  const ComplexMatrix image = affmap::apply_affine(map, rho, 1e-8);
  emit_json(c, {{"rho_in", affmap::io::to_json(rho)},
                {"rho_out", affmap::io::to_json(image)},
                {"bloch_in", affmap::io::to_json(affmap::bloch_of(rho, map.basis_s()))},
                {"bloch_out",
                 affmap::io::to_json(affmap::bloch_of(image, map.basis_s()))},
                {"is_psd", affmap::is_psd(image, c.tol)}});
  return 0;
}

int cmd_check_cp(const RunConfig& c) {
  const affmap::AffineMap map = load_map(c);
  const affmap::CpCheck cp = affmap::choi_and_cp(map, c.tol);
  const affmap::PmDecomposition pm = affmap::pm_decomposition(map);
  emit_json(c, {{"is_cp", cp.is_cp},
                {"choi", affmap::io::to_json(cp.choi.c)},
                {"choi_eigenvalues", affmap::io::to_json(cp.eigenvalues)},
                {"pm_signs", pm.signs},
                {"pm_positive_count", pm.positive_count}});
  return 0;
}

int cmd_purity(const RunConfig& c) {
  const affmap::AffineMap map = load_map(c);
  const ComplexMatrix rho = load_state(c, map);
  const double nk = static_cast<double>(map.n());
  // At ρ = I/N the change equals Σλ², λ the eigenvalues of K.
  const double sum_sq = (map.k() * map.k()).trace().real();
  emit_json(c, {{"purity_delta", affmap::purity_delta(map, rho, 1e-8)},
                {"purity_delta_maximally_mixed",
                 affmap::purity_delta(map, affmap::identity(map.n()) / nk)},
                {"sum_k_eigenvalues_squared", sum_sq},
                {"properties", properties(map)}});
  return 0;
}

std::string sidecar_path(const std::string& csv) {
  std::filesystem::path p(csv);
  p.replace_extension(".json");
  return p.string();
}

int cmd_domains(const RunConfig& c) {
  const JointStateCoeffs spec = load_spec(c);
  std::optional<affmap::AffineMap> map;
  if (!c.map_file.empty()) map = load_map(c);
  affmap::SampleOptions o;
  if (!c.section.empty()) o.section = affmap::Section::parse(c.section);
  o.region = c.random_count > 0 ? affmap::SampleRegion::kRandom
                                : affmap::SampleRegion::kGrid;
  o.count = c.random_count;
  o.resolution = c.resolution.value_or(o.section ? 101 : 20);
  o.seed = c.seed;
  o.tol = c.tol;
  const affmap::DomainSample s =
      affmap::sample_domain(spec, map ? &*map : nullptr, o);
  std::ostringstream csv;
  affmap::write_domain_csv(csv, s);
  emit(c, csv.str());
  if (!c.out.empty()) {
    int in = 0, unknown = 0, pos = 0;
    for (const auto& p : s.points) {
      in += p.compat == affmap::kCompatIn;
      unknown += p.compat == affmap::kCompatUnknown;
      pos += p.pos;
    }
    affmap::io::write_json_file(
        sidecar_path(c.out),
        {{"csv", std::filesystem::path(c.out).filename().string()},
         {"spec", affmap::io::to_json(spec)},
         {"map", map ? affmap::io::map_to_json(*map) : Json()},
         {"map_file", c.map_file},
         {"region", o.section ? o.section->name() : "volume"},
         {"sampling", o.region == affmap::SampleRegion::kRandom ? "random" : "grid"},
         {"seed", c.seed},
         {"resolution", o.resolution},
         {"count", s.points.size()},
         {"reading", s.partial ? "partial" : "full"},
         {"counts", {{"in", in}, {"unknown", unknown}, {"pos", pos}}}});
  }
  return 0;
}

int cmd_image(const RunConfig& c) {
  const affmap::AffineMap map = load_map(c);
  const affmap::Section section =
      affmap::Section::parse(c.section.empty() ? "p1p2" : c.section);
  std::ostringstream csv;
  affmap::write_image_csv(
      csv, affmap::image_of_ball(map, section, c.resolution.value_or(361)));
  emit(c, csv.str());
  return 0;
}

Json reconstruction_json(const affmap::ReconstructedMap& r) {
  Json f = Json::array();
  for (const auto& fp : r.f_primes) f.push_back(affmap::io::to_json(fp));
  return {{"n", r.n},
          {"one_prime", affmap::io::to_json(r.one_prime)},
          {"f_primes", std::move(f)},
          {"k", affmap::io::to_json(r.k)},
          {"residual", r.residual}};
}

int cmd_tomography(const RunConfig& c) {
  std::optional<affmap::AffineMap> truth;
  if (!c.map_file.empty()) truth = load_map(c);
  Json out;
  affmap::ReconstructedMap recon;
  if (!c.pairs_file.empty()) {
    const auto pairs =
        affmap::io::pairs_from_json(affmap::io::read_json_file(c.pairs_file));
    if (pairs.empty()) throw affmap::ValidationError("--pairs: no pairs");
    const int dim = static_cast<int>(pairs.front().rho_out.rows());
    recon = affmap::reconstruct_map_lstsq(dim, pairs, 1e-8);
    out["source"] = "pairs";
  } else {
    if (!truth) throw affmap::ValidationError("--map or --pairs is required");
    const JointStateCoeffs spec = load_spec(c);
    const int axes = spec.n * spec.n - 1;
    const RealVector base = c.base.empty() ? RealVector(RealVector::Zero(axes))
                                           : parse_list(c.base, axes, "--base");
    affmap::ProbeSet probes = affmap::design_probes(spec, base, c.eps, c.tol);
    affmap::evaluate_probes(probes, affmap::map_oracle(*truth));
    recon = affmap::reconstruct_map(probes);
    out["source"] = "map";
    out["probes"] = affmap::io::to_json(probes.pairs);
    out["deltas"] = affmap::io::to_json(probes.deltas);
  }
  out["reconstruction"] = reconstruction_json(recon);
  if (truth) {
    const affmap::ValidationReport v =
        affmap::validate_reconstruction(recon, *truth, 1e-9);
    out["validation"] = {{"one_prime_dev", v.one_prime_dev},
                         {"f_prime_dev", v.f_prime_dev},
                         {"k_dev", v.k_dev},
                         {"max_dev", v.max_dev},
                         {"pass", v.pass}};
  } else {
    out["validation"] = nullptr;
  }
  emit_json(c, out);
  return 0;
}

Json witness_json(const q2::KappaWitness& w) {
  return {{"family", q2::to_string(w.family)},
          {"params", w.params},
          {"kappa", {w.kappa(0), w.kappa(1), w.kappa(2)}},
          {"unitary", affmap::io::to_json(w.unitary)},
          {"state", affmap::io::to_json(w.coeffs)}};
}

int cmd_kappa(const RunConfig& c) {
  if (c.trials < 1) throw affmap::ValidationError("--trials must be >= 1");
  const q2::KappaFamily family = q2::parse_family(c.family);
  q2::KappaSearchOptions options;
  options.tol = c.tol;
  const q2::KappaSearchResult r = q2::kappa_search(family, c.trials, c.seed, options);
  emit_json(c, {{"family", q2::to_string(family)},
                {"trials", r.trials},
                {"seed", c.seed},
                {"best_kappa_norm", r.best_kappa_norm},
                {"best_trial", r.best_trial},
                {"golden_ratio_bound", (1.0 + std::sqrt(5.0)) / 2.0},
                {"bound_violations", r.bound_violations},
                {"max_bound_ratio", r.max_bound_ratio},
                {"witness", witness_json(r.witness)}});
  return 0;
}

int cmd_example(const RunConfig& c) {
  const JointStateCoeffs spec =
      c.spec_file.empty() ? default_example_spec() : load_spec(c);
  if (spec.n != 2 || spec.m != 2) {
    throw affmap::DimensionError("examples need a two-qubit spec");
  }
  const ComplexMatrix pi = affmap::reconstruct_state(spec, q2::qubit_basis());
  affmap::require_density_matrix(pi, 1e-8, "example joint state");
  Json out;
  std::vector<ComplexMatrix> closed_g;
  q2::Vec3 closed_kappa;
  ComplexMatrix u;
  if (c.target == "int-ham") {
    const q2::IntHamParams p =
        c.gamma.empty() ? q2::IntHamParams{{0.7, 1.1, 0.4}} : gamma_of(c);
    u = q2::int_ham_unitary(p);
    closed_g = q2::int_ham_g_ops(p);
    closed_kappa = q2::int_ham_kappa(p, spec);
    out["gamma"] = p.gamma;
    out["closed_form_b_matrix"] =
        affmap::io::to_json(q2::int_ham_b_matrix(p, closed_kappa).b);
  } else if (c.target == "lorentz") {
    q2::LorentzParams p{{q2::Vec3::UnitZ(), 1.2}, {q2::Vec3::UnitX(), 0.7}};
    if (!c.rotations_file.empty()) {
      const Json j = affmap::io::read_json_file(c.rotations_file);
      p.r1 = affmap::io::rotation_from_json(j.at("r1"));
      p.r2 = affmap::io::rotation_from_json(j.at("r2"));
    }
    u = q2::lorentz_unitary(p);
    closed_g = q2::lorentz_map(p, spec).g_ops();
    closed_kappa = q2::lorentz_kappa(p, spec);
    out["r1"] = affmap::io::to_json(p.r1);
    out["r2"] = affmap::io::to_json(p.r2);
  } else {
    throw affmap::ValidationError("example must be int-ham or lorentz");
  }
  const affmap::AffineMap map =
      affmap::map_from_unitary(u, pi, q2::qubit_basis(), c.tol);
  double g_dev = 0.0;
  for (std::size_t i = 0; i < closed_g.size(); ++i) {
    g_dev = std::max(g_dev, affmap::max_abs_diff(closed_g[i], map.g_ops()[i]));
  }
  Json closed_g_json = Json::array();
  for (const auto& g : closed_g) closed_g_json.push_back(affmap::io::to_json(g));
  out["family"] = c.target;
  out["spec"] = affmap::io::to_json(spec);
  out["map"] = affmap::io::map_to_json(map);
  out["properties"] = properties(map);
  out["closed_form_g_ops"] = std::move(closed_g_json);
  out["closed_form_kappa"] = {closed_kappa(0), closed_kappa(1), closed_kappa(2)};
  out["max_g_deviation"] = g_dev;
  out["max_kappa_deviation"] = (q2::kappa_of(map) - closed_kappa).cwiseAbs().maxCoeff();
  emit_json(c, out);
  return 0;
}

int cmd_preset(const RunConfig& c) {
  affmap::presets::PresetOptions o;
  o.resolution = c.resolution.value_or(o.resolution);
  o.seed = c.seed;
  o.tol = c.tol;
  o.out_dir = c.out.empty() ? c.target : c.out;
  const affmap::presets::PresetResult r = affmap::presets::run_preset(c.target, o);
  Json files = Json::array();
  for (const auto& f : r.files) files.push_back(f);
  std::cout << affmap::io::dump({{"preset", r.name}, {"files", files}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine maps of open quantum subsystems"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--tol", c.tol, "Numerical tolerance");
    sub->add_option("--out", c.out, "Output path (stdout when omitted)");
  };

  auto* extract = app.add_subcommand("extract", "Map from a joint unitary and state");
  extract->add_option("--gamma", c.gamma, "Interaction angles a,b,c");
  extract->add_option("--unitary", c.unitary_file, "Unitary JSON file");
  extract->add_option("--spec", c.spec_file, "Joint state JSON file");
  add_common(extract);

  auto* apply = app.add_subcommand("apply", "Apply a map to a state");
  apply->add_option("--map", c.map_file, "Map JSON file")->required();
  apply->add_option("--bloch", c.bloch, "Input Bloch-type vector");
  apply->add_option("--state", c.state_file, "Input state JSON file");
  add_common(apply);

  auto* check_cp = app.add_subcommand("check-cp", "Complete-positivity check");
  check_cp->add_option("--map", c.map_file, "Map JSON file")->required();
  add_common(check_cp);

  auto* purity = app.add_subcommand("purity", "Purity change under a map");
  purity->add_option("--map", c.map_file, "Map JSON file")->required();
  purity->add_option("--bloch", c.bloch, "Input Bloch-type vector");
  purity->add_option("--state", c.state_file, "Input state JSON file");
  add_common(purity);

  auto* domains = app.add_subcommand("domains", "Sample compatibility and positivity domains");
  domains->add_option("--spec", c.spec_file, "Joint-state spec JSON file")->required();
  domains->add_option("--map", c.map_file, "Map JSON file");
  domains->add_option("--section", c.section, "p1p2, p1p3 or p2p3 (volume when omitted)");
  domains->add_option("--resolution", c.resolution, "Grid points per side or shells");
  domains->add_option("--random", c.random_count, "Random points instead of a grid");
  domains->add_option("--seed", c.seed, "Random seed");
  add_common(domains);

  auto* image = app.add_subcommand("image", "Image of the unit circle of a section");
  image->add_option("--map", c.map_file, "Map JSON file")->required();
  image->add_option("--section", c.section, "p1p2, p1p3 or p2p3");
  image->add_option("--resolution", c.resolution, "Points on the circle");
  add_common(image);

  auto* tomo = app.add_subcommand("tomography", "Reconstruct a map from probe pairs");
  tomo->add_option("--map", c.map_file, "Ground-truth map JSON file");
  tomo->add_option("--pairs", c.pairs_file, "Probe pair JSON file");
  tomo->add_option("--spec", c.spec_file, "Joint-state spec JSON file");
  tomo->add_option("--base", c.base, "Base Bloch-type vector");
  tomo->add_option("--eps", c.eps, "Initial probe step");
  add_common(tomo);

  auto* kappa = app.add_subcommand("kappa", "Search for large |kappa|");
  kappa->add_option("--family", c.family, "int_ham, lorentz or random_unitary");
  kappa->add_option("--trials", c.trials, "Number of trials");
  kappa->add_option("--seed", c.seed, "Random seed");
  add_common(kappa);

  auto* example = app.add_subcommand("example", "Closed-form example families");
  example->add_option("family", c.target, "int-ham or lorentz")->required();
  example->add_option("--gamma", c.gamma, "Interaction angles a,b,c");
  example->add_option("--rotations", c.rotations_file, "Rotation pair JSON file");
  example->add_option("--spec", c.spec_file, "Joint-state spec JSON file");
  add_common(example);

  auto* preset = app.add_subcommand("preset", "Write figure data sets");
  preset->add_option("name", c.target, "fig1, fig1a or fig2")->required();
  preset->add_option("--resolution", c.resolution, "Grid points per side");
  preset->add_option("--seed", c.seed, "Random seed");
  add_common(preset);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*extract) return cmd_extract(c);
    if (*apply) return cmd_apply(c);
    if (*check_cp) return cmd_check_cp(c);
    if (*purity) return cmd_purity(c);
    if (*domains) return cmd_domains(c);
    if (*image) return cmd_image(c);
    if (*tomo) return cmd_tomography(c);
    if (*kappa) return cmd_kappa(c);
    if (*example) return cmd_example(c);
    if (*preset) return cmd_preset(c);
  } catch (const affmap::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const affmap::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const affmap::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
