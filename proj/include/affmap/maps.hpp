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

#include "affmap/basis.hpp"
#include "affmap/linalg.hpp"

namespace affmap {

/// The subsystem evolution ρ ↦ L(ρ) + K with L(Q) = Σ_ν G(ν) Q G(ν)†.
///
/// The G(ν) list is the primary representation of L. The constructor checks
/// that K is Hermitian and traceless and that Σ G†G = Σ GG† = I, and fills the
/// basis-image caches 1' = I + N·K and F'_α = L(F_{α0}).
class AffineMap {
 public:
  AffineMap(std::vector<ComplexMatrix> g_ops, ComplexMatrix k,
            double tol = 1e-8);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<ComplexMatrix>& g_ops() const { return g_ops_; }
  const ComplexMatrix& k() const { return k_; }
  const ComplexMatrix& one_prime() const { return one_prime_; }
  /// L(F_{α0}) for α = 1..N²-1 (index 0 holds α = 1).
  const std::vector<ComplexMatrix>& f_primes() const { return f_primes_; }
  const HermitianBasis& basis_s() const { return basis_s_; }

 private:
  int n_;
  int m_;
  std::vector<ComplexMatrix> g_ops_;
  ComplexMatrix k_;
  HermitianBasis basis_s_;
  ComplexMatrix one_prime_;
  std::vector<ComplexMatrix> f_primes_;
};

/// B_{rj;sk} stored with row r·N + j and column s·N + k, so that
/// Q'_{rs} = Σ_{jk} B_{rj;sk} Q_{jk}. For qubits the row/column order is
/// 11, 12, 21, 22.
struct BMatrix {
  int n = 0;
  ComplexMatrix b;

  ComplexMatrix apply(const ComplexMatrix& q) const;
};

/// Choi matrix Σ_{jk} E_jk ⊗ f(E_jk) of the linear extension f, output
/// factor second: entry (j·N + r, k·N + s) = f(E_jk)_{rs}.
struct ChoiMatrix {
  int n = 0;
  ComplexMatrix c;
};

struct CpCheck {
  ChoiMatrix choi;
  RealVector eigenvalues;  // ascending
  bool is_cp = false;
};

/// Q' = Σ_n s_n C(n) Q C(n)†, positive signs first.
struct PmDecomposition {
  std::vector<ComplexMatrix> ops;
  std::vector<int> signs;
  int positive_count = 0;

  ComplexMatrix apply(const ComplexMatrix& q) const;
};

/// G(ν) = (1/M) Tr_R[U (I ⊗ F_{0ν})], so that U = Σ_ν G(ν) ⊗ F_{0ν}.
std::vector<ComplexMatrix> extract_G(
    const ComplexMatrix& u, const HermitianBasis& basis_r,
    double tol = kDefaultTol);

/// K = Σ_{μ≥1} Tr[U†F_{μ0}U (Π - ρ⊗I/M)] F_{μ0} / N with ρ = Tr_R Π.
ComplexMatrix extract_K(
    const ComplexMatrix& u, const ComplexMatrix& pi, const ProductBasis& pb,
    double tol = kDefaultTol);

/// The map determined by a joint unitary and a joint state.
AffineMap map_from_unitary(
    const ComplexMatrix& u, const ComplexMatrix& pi, const ProductBasis& pb,
    double tol = kDefaultTol);

ComplexMatrix apply_L(const AffineMap& map, const ComplexMatrix& q);

ComplexMatrix apply_affine(
    const AffineMap& map, const ComplexMatrix& rho, double tol = kDefaultTol);

/// L(Q) + K·Tr[Q], defined on every N×N matrix.
ComplexMatrix linear_extension(const AffineMap& map, const ComplexMatrix& q);

BMatrix b_matrix(const AffineMap& map);

ChoiMatrix choi_matrix(const AffineMap& map);

/// Index reshuffle between the two representations.
ChoiMatrix choi_from_b(const BMatrix& b);
BMatrix b_from_choi(const ChoiMatrix& choi);

CpCheck choi_and_cp(const AffineMap& map, double tol = kDefaultTol);

PmDecomposition pm_decomposition(const AffineMap& map, double tol = 1e-10);

/// Tr[(ρ^U)²] - Tr[ρ²].
double purity_delta(
    const AffineMap& map, const ComplexMatrix& rho, double tol = kDefaultTol);

/// Tr_S[A K] computed in the full space as Tr[U†AU (Π - ρ⊗I/M)].
double mean_value_correction(
    const ComplexMatrix& a, const ComplexMatrix& u, const ComplexMatrix& pi,
    double tol = kDefaultTol);

/// Checks that pi is a Hermitian, unit-trace, PSD matrix.
void require_density_matrix(
    const ComplexMatrix& pi, double tol, const char* what);

}  // namespace affmap
