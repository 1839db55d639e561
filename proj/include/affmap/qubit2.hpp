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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "affmap/basis.hpp"
#include "affmap/maps.hpp"

namespace affmap::qubit2 {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Angles of U = exp(-i/2 Σ_j γ_j σ_j ξ_j), radians.
struct IntHamParams {
  std::array<double, 3> gamma{0.0, 0.0, 0.0};
};

/// Axis-angle rotation. A zero axis with a zero angle is the identity.
struct Rotation {
  Vec3 axis = Vec3::UnitZ();
  double angle = 0.0;
};

/// U = D1 ⊗ (I + ξ1)/2 + D2 ⊗ (I - ξ1)/2 with D_i†σ⃗D_i = R_i(σ⃗).
struct LorentzParams {
  Rotation r1;
  Rotation r2;
};

/// The two-qubit product basis {I, σ1, σ2, σ3} ⊗ {I, ξ1, ξ2, ξ3}.
const ProductBasis& qubit_basis();

/// Closed-form U: the product of the three commuting factors
/// cos(γ_j/2) I - i sin(γ_j/2) σ_j ξ_j.
ComplexMatrix int_ham_unitary(const IntHamParams& p);

/// Closed-form G(ν) in the ξ basis: G(0) ∝ I and G(j) ∝ σ_j.
std::vector<ComplexMatrix> int_ham_g_ops(const IntHamParams& p);

/// Bloch contraction factors (cos γ2 cos γ3, cos γ3 cos γ1, cos γ1 cos γ2).
Vec3 int_ham_contraction(const IntHamParams& p);

/// κ from the three environment means <ξ_k> and the six off-diagonal
/// correlations <σ_j ξ_k>, j ≠ k. Other entries of corr are ignored.
Vec3 int_ham_kappa(const IntHamParams& p, const JointStateCoeffs& corr);

AffineMap int_ham_map(const IntHamParams& p, const JointStateCoeffs& corr);

/// The 4×4 B array written out entry by entry (rows/columns 11,12,21,22).
BMatrix int_ham_b_matrix(const IntHamParams& p, const Vec3& kappa);

/// R = cos θ I + sin θ [n]× + (1 - cos θ) n nᵀ, acting as R(v)_i = Σ_j R_ij v_j.
Mat3 rotation_matrix(const Rotation& r);

/// D = cos(θ/2) I - i sin(θ/2) n·σ⃗, so that D†σ_i D = Σ_j R_ij σ_j.
/// Consequently D(R1)·D(R2) conjugates σ⃗ with the matrix R1·R2.
ComplexMatrix su2_from_rotation(const Vec3& axis, double angle);

ComplexMatrix lorentz_unitary(const LorentzParams& p);

/// κ⃗ = ½ (R1 - R2) c with c_j = <σ_j ξ1>.
Vec3 lorentz_kappa(const LorentzParams& p, const JointStateCoeffs& corr);

AffineMap lorentz_map(const LorentzParams& p, const JointStateCoeffs& corr);

/// κ_j = Tr[σ_j K] of a qubit map.
Vec3 kappa_of(const AffineMap& map);

/// a ↦ a^U, the Bloch vector of L(ρ) + K for ρ = ½(I + a·σ⃗).
Vec3 bloch_image(const AffineMap& map, const Vec3& a);

struct KappaBounds {
  double kappa_norm = 0.0;
  double bound_a = 0.0;  // sqrt(3 - |<σ⃗>|²)
  double bound_b = 0.0;  // 1 + |<σ⃗>|
  bool ok = false;
};

/// |κ| from extract_K against the two state-dependent bounds.
KappaBounds kappa_bounds_check(
    const ComplexMatrix& u, const JointStateCoeffs& coeffs,
    double tol = kDefaultTol);

enum class KappaFamily { kIntHam, kLorentz, kRandomUnitary };

std::string to_string(KappaFamily family);
KappaFamily parse_family(const std::string& name);

struct KappaWitness {
  KappaFamily family = KappaFamily::kIntHam;
  std::vector<double> params;  // family parameters, see kappa_search
  ComplexMatrix unitary;
  JointStateCoeffs coeffs;
  Vec3 kappa = Vec3::Zero();
};

struct KappaSearchOptions {
  int refine_top = 4;        // trials that get local refinement
  int refine_sweeps = 4;     // coordinate sweeps per refined trial
  int golden_iters = 24;     // golden-section steps per coordinate
  int state_steps = 16;      // projected-gradient steps per evaluation
  double tol = kDefaultTol;  // bound-check tolerance
};

struct KappaSearchResult {
  double best_kappa_norm = 0.0;
  int best_trial = -1;
  KappaWitness witness;
  int trials = 0;
  int bound_violations = 0;    // trials whose final (U, Π) fails a bound
  double max_bound_ratio = 0.0;  // max |κ| / min(bound_a, bound_b)
};

/// Randomized search for large |κ| within a family, followed by
/// coordinate-wise golden-section refinement over the family angles for the
/// best trials. The state is optimized by projected gradient ascent over
/// density matrices (exact projection onto the unit-trace PSD set).
///
/// Parameters: int_ham (γ1, γ2, γ3); lorentz (θ1, φ1, angle1, θ2, φ2,
/// angle2) with axes in spherical coordinates; random_unitary the 16
/// coefficients h of U = exp(-i Σ h_{μν} F_{μν}).
///
/// Trials run in parallel; the best is reduced by value with ties going to
/// the lowest trial index.
KappaSearchResult kappa_search(
    KappaFamily family, int trials, std::uint64_t seed,
    const KappaSearchOptions& options = {});

}  // namespace affmap::qubit2
