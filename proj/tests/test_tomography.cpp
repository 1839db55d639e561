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

#include <catch_amalgamated.hpp>

#include "affmap/domains.hpp"
#include "affmap/presets.hpp"
#include "affmap/qubit2.hpp"
#include "affmap/random.hpp"
#include "affmap/tomography.hpp"
#include "support.hpp"

using namespace affmap;

TEST_CASE("round trip through the full joint evolution", "[tomography]") {
  Rng rng = make_rng(51);
  for (const auto& [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const ProductBasis pb(n, m);
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix u = random_unitary(rng, n * m);
      const ComplexMatrix pi = random_density_matrix(rng, n * m, n * m);
      const JointStateCoeffs spec = expand_state(pi, pb);
      const AffineMap truth = map_from_unitary(u, pi, pb);
      ProbeSet probes = design_probes(spec, marginal_coeffs(spec));
      REQUIRE(static_cast<int>(probes.pairs.size()) == n * n);
      CHECK((probes.deltas.array() > 0).all());
      // The oracle evolves every probe state in the full space.
      evaluate_probes(probes, [&](const RealVector& a) {
        const ComplexMatrix joint = reconstruct_state(apply_probe(spec, a), pb);
        return oracle::trace_env(u * joint * u.adjoint(), n, m);
      });
      const ReconstructedMap recon = reconstruct_map(probes);
      const ValidationReport v = validate_reconstruction(recon, truth, 1e-9);
      CHECK(v.pass);
      CHECK(v.max_dev < 1e-9);
    }
  }
}

TEST_CASE("library oracles give the same pairs", "[tomography]") {
  Rng rng = make_rng(52);
  const ProductBasis pb(2, 2);
  const ComplexMatrix u = random_unitary(rng, 4);
  const ComplexMatrix pi = random_density_matrix(rng, 4, 4);
  const JointStateCoeffs spec = expand_state(pi, pb);
  const AffineMap truth = map_from_unitary(u, pi, pb);
  ProbeSet a = design_probes(spec, marginal_coeffs(spec));
  ProbeSet b = a;
  evaluate_probes(a, map_oracle(truth));
  evaluate_probes(b, joint_evolution_oracle(spec, u));
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    CHECK(oracle::max_abs(a.pairs[i].rho_out, b.pairs[i].rho_out) < 1e-12);
  }
}

TEST_CASE("fig2 preset: the origin is rejected, the sphere center works",
          "[tomography]") {
  const JointStateCoeffs spec = presets::fig2_spec();
  CHECK_THROWS_AS(design_probes(spec, RealVector::Zero(3)), InfeasibleError);
  RealVector base(3);
  base << 0.0, 0.0, 1.0 / std::sqrt(3.0);
  ProbeSet probes = design_probes(spec, base);
  CHECK(probes.pairs.size() == 4);
  for (const auto& p : probes.pairs) CHECK(is_compatible_full({spec, p.rho_in_coeffs}));
  // Reconstruct an int-ham map with this spec from joint evolution data.
  const ComplexMatrix u = qubit2::int_ham_unitary({{0.9, -1.7, 2.3}});
  evaluate_probes(probes, joint_evolution_oracle(spec, u));
  const ReconstructedMap recon = reconstruct_map(probes);
  const ProductBasis& pb = qubit2::qubit_basis();
  const AffineMap truth =
      map_from_unitary(u, reconstruct_state(apply_probe(spec, base), pb), pb);
  CHECK(validate_reconstruction(recon, truth, 1e-9).pass);
}

TEST_CASE("probe steps shrink near the boundary", "[tomography]") {
  // Base on the boundary of the small fig2 sphere: every axis still has an
  // admissible step, found by halving or by flipping the sign.
  const JointStateCoeffs spec = presets::fig2_spec();
  const double x = 1.0 / std::sqrt(3.0);
  RealVector base(3);
  base << 0.0, 0.0, 2.0 * x - 1.0 + 1e-3;  // just above the lowest point
  const ProbeSet probes = design_probes(spec, base);
  for (int a = 0; a < 3; ++a) {
    CHECK(probes.deltas(a) > 0.0);
    CHECK(probes.deltas(a) <= kDefaultProbeStep);
  }
  CHECK(probes.deltas(0) < kDefaultProbeStep);  // sideways room is tiny
  CHECK(probes.pairs[3].rho_in_coeffs(2) > base(2));  // only upward works
}

TEST_CASE("least squares uses every pair", "[tomography]") {
  Rng rng = make_rng(53);
  const ProductBasis pb(2, 2);
  const ComplexMatrix u = random_unitary(rng, 4);
  const ComplexMatrix pi = random_density_matrix(rng, 4, 4);
  const JointStateCoeffs spec = expand_state(pi, pb);
  const AffineMap truth = map_from_unitary(u, pi, pb);
  std::vector<ProbePair> pairs;
  const auto evolve = map_oracle(truth);
  for (int i = 0; i < 12; ++i) {
    const RealVector a = 0.9 * random_in_ball(rng, 3);
    pairs.push_back({a, evolve(a)});
  }
  const ReconstructedMap recon = reconstruct_map_lstsq(2, pairs);
  CHECK(validate_reconstruction(recon, truth, 1e-9).pass);
  CHECK(recon.residual < 1e-12);

  // Inconsistent data: a pair from a different map.
  const AffineMap other = map_from_unitary(random_unitary(rng, 4), pi, pb);
  pairs.push_back({pairs[0].rho_in_coeffs, map_oracle(other)(pairs[0].rho_in_coeffs)});
  CHECK_THROWS_AS(reconstruct_map_lstsq(2, pairs), ValidationError);

  // Collinear inputs do not determine the map.
  std::vector<ProbePair> line;
  for (int i = 0; i < 6; ++i) {
    RealVector a = RealVector::Zero(3);
    a(0) = 0.1 * i;
    line.push_back({a, evolve(a)});
  }
  CHECK_THROWS_AS(reconstruct_map_lstsq(2, line), ValidationError);
}

TEST_CASE("extra pairs in a probe set are consistency checks", "[tomography]") {
  Rng rng = make_rng(54);
  const ProductBasis pb(2, 2);
  const ComplexMatrix pi = random_density_matrix(rng, 4, 4);
  const JointStateCoeffs spec = expand_state(pi, pb);
  const AffineMap truth = map_from_unitary(random_unitary(rng, 4), pi, pb);
  ProbeSet probes = design_probes(spec, marginal_coeffs(spec));
  probes.pairs.push_back({marginal_coeffs(spec) * 0.5, {}});
  evaluate_probes(probes, map_oracle(truth));
  CHECK(reconstruct_map(probes).residual < 1e-12);
  probes.pairs.back().rho_out(0, 0) += 1e-3;
  probes.pairs.back().rho_out(1, 1) -= 1e-3;
  CHECK_THROWS_AS(reconstruct_map(probes), ValidationError);

  ProbeSet twice = probes;
  twice.pairs.resize(4);
  twice.pairs[2].rho_in_coeffs = twice.pairs[1].rho_in_coeffs;
  CHECK_THROWS_AS(reconstruct_map(twice), ValidationError);
}
