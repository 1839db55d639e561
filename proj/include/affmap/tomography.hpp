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

#pragma once

#include <functional>
#include <vector>

#include "affmap/basis.hpp"
#include "affmap/maps.hpp"

namespace affmap {

struct ProbePair {
  RealVector rho_in_coeffs;  // <F_{α0}>, α = 1..N²-1
  ComplexMatrix rho_out;     // empty until evaluated
};

/// Base state followed by one state per axis that differs from the base only
/// in that axis, by ±deltas(α).
struct ProbeSet {
  int n = 2;
  RealVector base;
  RealVector deltas;  // strictly positive step per axis
  std::vector<ProbePair> pairs;
};

inline constexpr double kDefaultProbeStep = 0.05;

/// Builds base + axis probes inside the compatibility domain of spec. Each
/// step starts at eps and is halved (at most 20 times) until base + step or
/// base - step is admissible. Throws InfeasibleError when the base is not
/// admissible or an axis has no admissible perturbation.
ProbeSet design_probes(
    const JointStateCoeffs& spec, const RealVector& base,
    double eps = kDefaultProbeStep, double tol = kDefaultTol);

using EvolutionOracle = std::function<ComplexMatrix(const RealVector&)>;

/// Fills every rho_out by calling the oracle on rho_in_coeffs.
void evaluate_probes(ProbeSet& probes, const EvolutionOracle& oracle);

/// Oracle backed by the affine map itself.
EvolutionOracle map_oracle(const AffineMap& map);

/// Oracle backed by the full joint evolution Tr_R[U Π U†], Π reconstructed
/// from spec with the probe substituted (spec must then be fully fixed).
EvolutionOracle joint_evolution_oracle(
    const JointStateCoeffs& spec, const ComplexMatrix& u);

struct ReconstructedMap {
  int n = 0;
  ComplexMatrix one_prime;
  std::vector<ComplexMatrix> f_primes;  // index 0 holds α = 1
  ComplexMatrix k;
  double residual = 0.0;  // max-abs misfit on pairs beyond the minimal set
};

/// Finite-difference reconstruction from a designed probe set:
/// F'_α = N Δρ^U / Δ<F_{α0}>, 1' = N ρ^U(base) - Σ base_α F'_α,
/// K = (1' - I)/N. Pairs beyond the minimal N² are used as a consistency
/// check; a residual above tol throws ValidationError.
ReconstructedMap reconstruct_map(const ProbeSet& probes, double tol = 1e-8);

/// Least-squares fit of 1' and F'_α over arbitrary pairs. Throws
/// ValidationError when the inputs do not span the affine hull or the
/// residual exceeds tol.
ReconstructedMap reconstruct_map_lstsq(
    int n, const std::vector<ProbePair>& pairs, double tol = 1e-8);

struct ValidationReport {
  double one_prime_dev = 0.0;
  double f_prime_dev = 0.0;
  double k_dev = 0.0;
  double max_dev = 0.0;
  bool pass = false;
};

ValidationReport validate_reconstruction(
    const ReconstructedMap& recon, const AffineMap& truth, double tol = 1e-9);

/// Applies the reconstruction: (1/N)(1' + Σ a_α F'_α).
ComplexMatrix apply_reconstruction(
    const ReconstructedMap& recon, const RealVector& coeffs);

}  // namespace affmap
