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

// Reference computations for the tests. Everything here is written from
// first principles (explicit loops, full-space evolution, Eigen's own
// geometry and eigen routines) and never calls into the library's code
// paths for the quantity being checked.

#pragma once

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>
#include <array>
#include <cmath>
#include <complex>

#include "affmap/linalg.hpp"

namespace oracle {

using affmap::Complex;
using affmap::ComplexMatrix;
using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

inline ComplexMatrix sigma(int k) {
  using namespace std::complex_literals;
  ComplexMatrix s(2, 2);
  switch (k) {
    case 0: s << 1.0, 0.0, 0.0, 1.0; break;
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -1i, 1i, 0.0; break;
    default: s << 1.0, 0.0, 0.0, -1.0; break;
  }
  return s;
}

inline ComplexMatrix eye(int n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Tr_R of an (n·m)×(n·m) matrix, system index slow.
inline ComplexMatrix trace_env(const ComplexMatrix& x, int n, int m) {
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < m; ++r) out(i, j) += x(i * m + r, j * m + r);
  return out;
}

/// Tr_S of an (n·m)×(n·m) matrix.
inline ComplexMatrix trace_sys(const ComplexMatrix& x, int n, int m) {
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      for (int i = 0; i < n; ++i) out(r, s) += x(i * m + r, i * m + s);
  return out;
}

/// Homogeneous part evaluated in the full space: Q ↦ Tr_R[U (Q ⊗ I/M) U†].
inline ComplexMatrix linear_part(
    const ComplexMatrix& u, const ComplexMatrix& q, int n, int m) {
  const ComplexMatrix joint = kron(q, eye(m) / static_cast<double>(m));
  return trace_env(u * joint * u.adjoint(), n, m);
}

/// Inhomogeneous part evaluated in the full space:
/// K = Tr_R[U (Π - Tr_R Π ⊗ I/M) U†].
inline ComplexMatrix inhomogeneous_part(
    const ComplexMatrix& u, const ComplexMatrix& pi, int n, int m) {
  const ComplexMatrix rho = trace_env(pi, n, m);
  const ComplexMatrix delta = pi - kron(rho, eye(m) / static_cast<double>(m));
  return trace_env(u * delta * u.adjoint(), n, m);
}

/// exp(-i·h) for Hermitian h by diagonalization.
inline ComplexMatrix expm_i(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(h)};
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// exp(-i/2 Σ γ_j σ_j ⊗ ξ_j) from the full Hamiltonian.
inline ComplexMatrix int_ham_unitary(const std::array<double, 3>& g) {
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  for (int j = 1; j <= 3; ++j) h += 0.5 * g[j - 1] * kron(sigma(j), sigma(j));
  return expm_i(h);
}

/// exp(-i θ/2 n·σ).
inline ComplexMatrix spin_rotation(const Vec3& axis, double angle) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  for (int j = 0; j < 3; ++j) h += 0.5 * angle * axis(j) * sigma(j + 1);
  return expm_i(h);
}

inline Mat3 rotation(const Vec3& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

/// <σ_j ⊗ ξ_k> etc. for a two-qubit state: Tr[(σ_j ⊗ ξ_k) Π].
inline double mean(const ComplexMatrix& pi, int j, int k) {
  return (kron(sigma(j), sigma(k)) * pi).trace().real();
}

/// Two-qubit state from its Pauli coefficients c(j, k) = <σ_j ξ_k>.
template <class M>
ComplexMatrix two_qubit_state(const M& c) {
  ComplexMatrix pi = ComplexMatrix::Zero(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) pi += c(j, k) * kron(sigma(j), sigma(k));
  return pi / 4.0;
}

inline double min_eig(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      Eigen::MatrixXcd(0.5 * (h + h.adjoint())), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

inline Eigen::VectorXd eigs(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      Eigen::MatrixXcd(0.5 * (h + h.adjoint())), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline double max_abs(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Bloch vector of a qubit state.
inline Vec3 bloch(const ComplexMatrix& rho) {
  return {(sigma(1) * rho).trace().real(), (sigma(2) * rho).trace().real(),
          (sigma(3) * rho).trace().real()};
}

// Closed forms for the interaction-Hamiltonian family, typed in directly.

/// Bloch contraction (cos γ2 cos γ3, cos γ3 cos γ1, cos γ1 cos γ2).
inline Vec3 int_ham_contraction(const std::array<double, 3>& g) {
  const double c1 = std::cos(g[0]), c2 = std::cos(g[1]), c3 = std::cos(g[2]);
  return {c2 * c3, c3 * c1, c1 * c2};
}

/// κ from <ξ_k> = c(0, k) and <σ_j ξ_k> = c(j, k).
template <class M>
Vec3 int_ham_kappa(const std::array<double, 3>& g, const M& c) {
  const double c1 = std::cos(g[0]), c2 = std::cos(g[1]), c3 = std::cos(g[2]);
  const double s1 = std::sin(g[0]), s2 = std::sin(g[1]), s3 = std::sin(g[2]);
  return {c(0, 1) * s2 * s3 - c(2, 3) * c2 * s3 + c(3, 2) * s2 * c3,
          c(0, 2) * s3 * s1 - c(3, 1) * c3 * s1 + c(1, 3) * s3 * c1,
          c(0, 3) * s1 * s2 - c(1, 2) * c1 * s2 + c(2, 1) * s1 * c2};
}

/// The 4×4 B array, rows/columns ordered 11, 12, 21, 22.
inline ComplexMatrix int_ham_b(const std::array<double, 3>& g, const Vec3& k) {
  using namespace std::complex_literals;
  const double c1 = std::cos(g[0]), c2 = std::cos(g[1]), c3 = std::cos(g[2]);
  const Complex km = k(0) - 1i * k(1), kp = k(0) + 1i * k(1);
  ComplexMatrix b(4, 4);
  b << 1 + k(2) + c1 * c2, 0, km, c2 * c3 + c3 * c1,
       0, 1 + k(2) - c1 * c2, c2 * c3 - c3 * c1, km,
       kp, c2 * c3 - c3 * c1, 1 - k(2) - c1 * c2, 0,
       c2 * c3 + c3 * c1, kp, 0, 1 - k(2) + c1 * c2;
  return 0.5 * b;
}

/// B_{rj;sk} from the action Q ↦ f(Q): f(E_jk)_{rs} at (r·2 + j, s·2 + k).
template <class F>
ComplexMatrix b_array(const F& f, int n) {
  ComplexMatrix b = ComplexMatrix::Zero(n * n, n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(j, k) = 1.0;
      const ComplexMatrix out = f(e);
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) b(r * n + j, s * n + k) = out(r, s);
    }
  return b;
}

}  // namespace oracle
