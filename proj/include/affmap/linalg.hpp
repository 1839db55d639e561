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

#include <Eigen/Dense>
#include <complex>

#include "affmap/errors.hpp"

namespace affmap {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major, zero-based (row, col) indexing.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

enum class TraceSide {
  kLeft,   // trace out the first factor, keep the second
  kRight,  // trace out the second factor, keep the first
};

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // orthonormal columns
};

ComplexMatrix identity(int dim);

/// Pauli matrices; index 0 is the identity.
ComplexMatrix pauli(int index);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of an (dim_s*dim_r)-square matrix over one tensor factor.
ComplexMatrix partial_trace(
    const ComplexMatrix& m, int dim_s, int dim_r, TraceSide side);

/// max |a_ij - b_ij|; dimensions must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(
    const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTol);

bool is_hermitian(const ComplexMatrix& h, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTol);

/// Throws ValidationError unless h is square and Hermitian within tol.
void require_hermitian(const ComplexMatrix& h, double tol, const char* what);
void require_unitary(const ComplexMatrix& u, double tol, const char* what);

/// Hermitian eigendecomposition (eigenvalues ascending). The Hermitian part
/// (h + h†)/2 is what gets diagonalized once the check passes.
HermitianEigen herm_eig(const ComplexMatrix& h, double tol = kDefaultTol);

/// exp(-i * scale * h) via the eigendecomposition of h.
ComplexMatrix unitary_from_hermitian(
    const ComplexMatrix& h, double scale, double tol = kDefaultTol);

double min_eigenvalue(const ComplexMatrix& h, double tol = kDefaultTol);

/// min eigenvalue >= -tol.
bool is_psd(const ComplexMatrix& h, double tol = kDefaultTol);

/// Frobenius inner product Tr[a† b].
Complex inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr[a b] without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace affmap
