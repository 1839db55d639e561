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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "affmap/domains.hpp"
#include "affmap/io.hpp"
#include "affmap/maps.hpp"
#include "affmap/presets.hpp"
#include "affmap/qubit2.hpp"
#include "affmap/random.hpp"
#include "affmap/tomography.hpp"

namespace py = pybind11;
using namespace affmap;

namespace {

qubit2::IntHamParams gamma_params(const std::array<double, 3>& g) { return {g}; }

qubit2::Rotation rotation_of(const qubit2::Vec3& axis, double angle) { return {axis, angle}; }

py::dict sample_to_dict(const DomainSample& s) {
  const Eigen::Index rows = static_cast<Eigen::Index>(s.points.size());
  const Eigen::Index dim = rows == 0 ? 0 : s.points.front().probe.size();
  RealMatrix probes(rows, dim);
  Eigen::VectorXi compat(rows), pos(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const DomainPoint& p = s.points[static_cast<std::size_t>(i)];
    probes.row(i) = p.probe.transpose();
    compat(i) = p.compat;
    pos(i) = p.pos;
  }
  py::dict d;
  d["probes"] = probes;
  d["compat"] = compat;
  d["pos"] = pos;
  d["partial"] = s.partial;
  return d;
}

py::dict images_to_dict(const std::vector<ImagePoint>& pts) {
  const Eigen::Index rows = static_cast<Eigen::Index>(pts.size());
  const Eigen::Index dim = rows == 0 ? 0 : pts.front().input.size();
  RealMatrix in(rows, dim), out(rows, dim);
  for (Eigen::Index i = 0; i < rows; ++i) {
    in.row(i) = pts[static_cast<std::size_t>(i)].input.transpose();
    out.row(i) = pts[static_cast<std::size_t>(i)].output.transpose();
  }
  py::dict d;
  d["input"] = in;
  d["output"] = out;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Affine dynamical maps of open quantum systems";

  auto base_error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", validation.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base_error.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base_error.ptr());

  py::class_<JointStateCoeffs>(m, "JointStateCoeffs")
      .def(py::init([](const RealMatrix& coeff, int n, int m_dim,
                       std::optional<BoolMatrix> free_mask) {
             JointStateCoeffs c;
             c.n = n;
             c.m = m_dim;
             c.coeff = coeff;
             c.free_mask = free_mask ? *free_mask
                                     : BoolMatrix::Constant(coeff.rows(), coeff.cols(), false);
             c.validate();
             return c;
           }),
           py::arg("coeff"), py::arg("n") = 2, py::arg("m") = 2,
           py::arg("free_mask") = py::none())
      .def_static("zeros", &JointStateCoeffs::zeros, py::arg("n"), py::arg("m"))
      .def_readwrite("n", &JointStateCoeffs::n)
      .def_readwrite("m", &JointStateCoeffs::m)
      .def_readwrite("coeff", &JointStateCoeffs::coeff)
      .def_readwrite("free_mask", &JointStateCoeffs::free_mask)
      .def("validate", &JointStateCoeffs::validate)
      .def_property_readonly("fully_fixed", &JointStateCoeffs::fully_fixed);

  py::class_<AffineMap>(m, "AffineMap")
      .def(py::init<std::vector<ComplexMatrix>, ComplexMatrix, double>(), py::arg("g_ops"),
           py::arg("k"), py::arg("tol") = 1e-8)
      .def_property_readonly("n", &AffineMap::n)
      .def_property_readonly("m", &AffineMap::m)
      .def_property_readonly("g_ops", &AffineMap::g_ops)
      .def_property_readonly("k", &AffineMap::k)
      .def_property_readonly("one_prime", &AffineMap::one_prime)
      .def_property_readonly("f_primes", &AffineMap::f_primes)
      .def("apply", [](const AffineMap& map, const ComplexMatrix& rho,
                       double tol) { return apply_affine(map, rho, tol); },
           py::arg("rho"), py::arg("tol") = kDefaultTol)
      .def("to_json", [](const AffineMap& map) { return io::dump(io::map_to_json(map)); })
      .def_static("from_json", [](const std::string& text) {
        return io::map_from_json(io::Json::parse(text));
      });

  // Bases and states.
  m.def("basis", [](int n) { return build_basis(n).mats(); }, py::arg("n"));
  m.def("expand_state", [](const ComplexMatrix& pi, int n, int m_dim, double tol) {
    return expand_state(pi, ProductBasis(n, m_dim), tol);
  }, py::arg("pi"), py::arg("n"), py::arg("m"), py::arg("tol") = kDefaultTol);
  m.def("reconstruct_state", [](const JointStateCoeffs& c) {
    return reconstruct_state(c, ProductBasis(c.n, c.m));
  }, py::arg("coeffs"));
  m.def("transfer_matrix", [](const ComplexMatrix& u, int n, int m_dim) {
    return transfer_matrix(u, ProductBasis(n, m_dim)).t;
  }, py::arg("u"), py::arg("n"), py::arg("m"));

  // Maps.
  m.def("map_from_unitary", [](const ComplexMatrix& u, const ComplexMatrix& pi, int n,
                               int m_dim, double tol) {
    return map_from_unitary(u, pi, ProductBasis(n, m_dim), tol);
  }, py::arg("u"), py::arg("pi"), py::arg("n"), py::arg("m"), py::arg("tol") = kDefaultTol);
  m.def("apply_L", &apply_L, py::arg("map"), py::arg("q"));
  m.def("linear_extension", &linear_extension, py::arg("map"), py::arg("q"));
  m.def("b_matrix", [](const AffineMap& map) { return b_matrix(map).b; }, py::arg("map"));
  m.def("choi_and_cp", [](const AffineMap& map, double tol) {
    const CpCheck cp = choi_and_cp(map, tol);
    py::dict d;
    d["choi"] = cp.choi.c;
    d["eigenvalues"] = cp.eigenvalues;
    d["is_cp"] = cp.is_cp;
    return d;
  }, py::arg("map"), py::arg("tol") = kDefaultTol);
  m.def("pm_decomposition", [](const AffineMap& map, double tol) {
    const PmDecomposition pm = pm_decomposition(map, tol);
    py::dict d;
    d["ops"] = pm.ops;
    d["signs"] = pm.signs;
    d["positive_count"] = pm.positive_count;
    return d;
  }, py::arg("map"), py::arg("tol") = 1e-10);
  m.def("purity_delta", &purity_delta, py::arg("map"), py::arg("rho"),
        py::arg("tol") = kDefaultTol);

  // Two-qubit families.
  m.def("int_ham_unitary", [](const std::array<double, 3>& g) {
    return qubit2::int_ham_unitary(gamma_params(g));
  }, py::arg("gamma"));
  m.def("int_ham_map", [](const std::array<double, 3>& g, const JointStateCoeffs& c) {
    return qubit2::int_ham_map(gamma_params(g), c);
  }, py::arg("gamma"), py::arg("coeffs"));
  m.def("lorentz_map", [](const qubit2::Vec3& axis1, double angle1, const qubit2::Vec3& axis2,
                          double angle2, const JointStateCoeffs& c) {
    return qubit2::lorentz_map({rotation_of(axis1, angle1), rotation_of(axis2, angle2)}, c);
  }, py::arg("axis1"), py::arg("angle1"), py::arg("axis2"), py::arg("angle2"),
        py::arg("coeffs"));
  m.def("kappa_of", &qubit2::kappa_of, py::arg("map"));
  m.def("bloch_image", &qubit2::bloch_image, py::arg("map"), py::arg("a"));
  m.def("kappa_search", [](const std::string& family, int trials, std::uint64_t seed) {
    const qubit2::KappaSearchResult r =
        qubit2::kappa_search(qubit2::parse_family(family), trials, seed);
    py::dict d;
    d["best_kappa_norm"] = r.best_kappa_norm;
    d["best_trial"] = r.best_trial;
    d["trials"] = r.trials;
    d["bound_violations"] = r.bound_violations;
    d["max_bound_ratio"] = r.max_bound_ratio;
    d["kappa"] = r.witness.kappa;
    d["unitary"] = r.witness.unitary;
    return d;
  }, py::arg("family"), py::arg("trials"), py::arg("seed") = 0);

  // Domains.
  m.def("is_compatible_full", [](const JointStateCoeffs& spec, const RealVector& probe,
                                 double tol) { return is_compatible_full({spec, probe}, tol); },
        py::arg("spec"), py::arg("probe"), py::arg("tol") = kDefaultTol);
  m.def("is_compatible_partial", [](const JointStateCoeffs& spec, const RealVector& probe,
                                    double tol, int max_iter) {
    const PartialResult r = is_compatible_partial({spec, probe}, tol, max_iter);
    py::dict d;
    d["status"] = to_string(r.status);
    d["witness"] = r.witness;
    d["iterations"] = r.iterations;
    d["distance"] = r.distance;
    return d;
  }, py::arg("spec"), py::arg("probe"), py::arg("tol") = kDefaultTol,
        py::arg("max_iter") = 10000);
  m.def("is_in_positivity_domain", &is_in_positivity_domain, py::arg("map"), py::arg("probe"),
        py::arg("tol") = kDefaultTol);
  m.def("sample_domain", [](const JointStateCoeffs& spec, std::optional<AffineMap> map,
                            std::optional<std::string> section, int resolution, int random,
                            std::uint64_t seed, double tol) {
    SampleOptions o;
    if (section) o.section = Section::parse(*section);
    o.resolution = resolution;
    if (random > 0) {
      o.region = SampleRegion::kRandom;
      o.count = random;
    }
    o.seed = seed;
    o.tol = tol;
    py::gil_scoped_release release;
    DomainSample s = sample_domain(spec, map ? &*map : nullptr, o);
    py::gil_scoped_acquire acquire;
    return sample_to_dict(s);
  }, py::arg("spec"), py::arg("map") = py::none(), py::arg("section") = py::none(),
        py::arg("resolution") = 101, py::arg("random") = 0, py::arg("seed") = 0,
        py::arg("tol") = kDefaultTol);
  m.def("image_of_ball", [](const AffineMap& map, const std::string& section,
                            int resolution) {
    return images_to_dict(image_of_ball(map, Section::parse(section), resolution));
  }, py::arg("map"), py::arg("section") = "p1p2", py::arg("resolution") = 361);

  // Tomography.
  m.def("tomography", [](const AffineMap& truth, const JointStateCoeffs& spec,
                         const RealVector& base, double eps, double tol) {
    ProbeSet probes = design_probes(spec, base, eps, tol);
    evaluate_probes(probes, map_oracle(truth));
    const ReconstructedMap recon = reconstruct_map(probes);
    const ValidationReport v = validate_reconstruction(recon, truth);
    py::dict d;
    d["one_prime"] = recon.one_prime;
    d["f_primes"] = recon.f_primes;
    d["k"] = recon.k;
    d["deltas"] = probes.deltas;
    d["max_dev"] = v.max_dev;
    d["pass"] = v.pass;
    return d;
  }, py::arg("truth"), py::arg("spec"), py::arg("base"),
        py::arg("eps") = kDefaultProbeStep, py::arg("tol") = kDefaultTol);

  // Presets.
  m.def("preset_names", &presets::preset_names);
  m.def("fig1_spec", &presets::fig1_spec, py::arg("diagonal_free") = true);
  m.def("fig2_spec", &presets::fig2_spec);
  m.def("fig1a_gamma", [] { return presets::fig1a_params().gamma; });
  m.def("run_preset", [](const std::string& name, const std::string& out_dir, int resolution,
                         std::uint64_t seed) {
    presets::PresetOptions o;
    o.out_dir = out_dir;
    o.resolution = resolution;
    o.seed = seed;
    presets::PresetResult r;
    {
      py::gil_scoped_release release;
      r = presets::run_preset(name, o);
    }
    py::dict samples, images;
    for (const auto& [stem, s] : r.samples) samples[py::str(stem)] = sample_to_dict(s);
    for (const auto& [stem, pts] : r.images) images[py::str(stem)] = images_to_dict(pts);
    py::dict d;
    d["samples"] = samples;
    d["images"] = images;
    d["files"] = r.files;
    return d;
  }, py::arg("name"), py::arg("out_dir") = "", py::arg("resolution") = 101,
        py::arg("seed") = 0);
}
