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

#include <vector>

#include "affmap/linalg.hpp"

namespace affmap {

/// N² Hermitian N×N matrices with mats[0] = identity, the rest traceless and
/// Tr[F_a F_b] = N δ_ab.
///
/// Ordering (index 0 first): identity; symmetric generators E_jk + E_kj for
/// j < k in row-major pair order; antisymmetric generators -i(E_jk - E_kj) in
/// the same pair order; diagonal generators l = 1..N-1. All generators are the
/// generalized Gell-Mann matrices scaled by sqrt(N/2). For N = 2 this is
/// {I, σ1, σ2, σ3}.
class HermitianBasis {
 public:
  explicit HermitianBasis(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(mats_.size()); }
  const ComplexMatrix& operator[](int index) const { return mats_.at(index); }
  const std::vector<ComplexMatrix>& mats() const { return mats_; }

 private:
  int dim_;
  std::vector<ComplexMatrix> mats_;
};

HermitianBasis build_basis(int n);

/// F_{μν} = F_{μ0} ⊗ F_{0ν} for a system S (dim N) and environment R (dim M).
/// The flat index of (μ, ν) is μ·M² + ν.
class ProductBasis {
 public:
  ProductBasis(int n, int m);
  ProductBasis(HermitianBasis basis_s, HermitianBasis basis_r);

  int n() const { return basis_s_.dim(); }
  int m() const { return basis_r_.dim(); }
  int size_s() const { return basis_s_.size(); }
  int size_r() const { return basis_r_.size(); }
  int dim() const { return n() * m(); }

  const HermitianBasis& basis_s() const { return basis_s_; }
  const HermitianBasis& basis_r() const { return basis_r_; }

  const ComplexMatrix& element(int mu, int nu) const {
    return products_.at(static_cast<std::size_t>(mu * size_r() + nu));
  }

 private:
  HermitianBasis basis_s_;
  HermitianBasis basis_r_;
  std::vector<ComplexMatrix> products_;
};

using BoolMatrix =
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Mean values <F_{μν}> of a joint state, coeff(0, 0) = 1, together with a
/// mask marking entries left free for completion problems.
struct JointStateCoeffs {
  int n = 2;
  int m = 2;
  RealMatrix coeff;     // N² × M²
  BoolMatrix free_mask; // true = free

  /// All-zero coefficients (maximally mixed joint state), all fixed.
  static JointStateCoeffs zeros(int n, int m);

  bool fully_fixed() const { return !free_mask.any(); }
  int free_count() const { return static_cast<int>(free_mask.count()); }

  /// Throws ValidationError on shape or normalization problems.
  void validate() const;
};

/// Orthogonal transfer matrix of a unitary; row/column flat index μ·M² + ν.
struct TransferMatrix {
  int n = 0;
  int m = 0;
  RealMatrix t;

  double at(int mu, int nu, int alpha, int beta) const {
    const int r = m * m;
    return t(mu * r + nu, alpha * r + beta);
  }
};

/// Tr[F_{αβ} X] for every (α, β), with no validation. Imaginary parts dropped.
RealMatrix coefficients_of(const ComplexMatrix& x, const ProductBasis& pb);

/// (1/NM) Σ c_{αβ} F_{αβ}, with no validation.
ComplexMatrix matrix_from_coefficients(
    const RealMatrix& c, const ProductBasis& pb);

JointStateCoeffs expand_state(
    const ComplexMatrix& pi, const ProductBasis& pb, double tol = kDefaultTol);

ComplexMatrix reconstruct_state(
    const JointStateCoeffs& c, const ProductBasis& pb);

/// <F_{α0}> for α = 1..N²-1.
RealVector marginal_coeffs(const JointStateCoeffs& c);

/// ρ = (1/N)(I + Σ_α a_α F_{α0}).
ComplexMatrix state_from_bloch(const RealVector& a, const HermitianBasis& b);

/// a_α = Tr[F_{α0} ρ], α ≥ 1.
RealVector bloch_of(const ComplexMatrix& rho, const HermitianBasis& b);

TransferMatrix transfer_matrix(
    const ComplexMatrix& u, const ProductBasis& pb, double tol = kDefaultTol);

}  // namespace affmap
