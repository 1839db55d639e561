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

#include "affmap/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <string>

namespace affmap {

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli(int index) {
  using namespace std::complex_literals;
  ComplexMatrix p(2, 2);
  switch (index) {
    case 0:
      p << 1, 0, 0, 1;
      break;
    case 1:
      p << 0, 1, 1, 0;
      break;
    case 2:
      p << 0, -1i, 1i, 0;
      break;
    case 3:
      p << 1, 0, 0, -1;
      break;
    default:
      throw ValidationError("pauli index must be in 0..3");
  }
  return p;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(
    const ComplexMatrix& m, int dim_s, int dim_r, TraceSide side) {
  if (dim_s < 1 || dim_r < 1) {
    throw DimensionError("partial_trace: factor dimensions must be positive");
  }
  const Eigen::Index total = static_cast<Eigen::Index>(dim_s) * dim_r;
  if (m.rows() != total || m.cols() != total) {
    throw DimensionError(
        "partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
        std::to_string(m.cols()) + ", expected " + std::to_string(total) +
        " square");
  }
  if (side == TraceSide::kRight) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_s, dim_s);
    for (int i = 0; i < dim_s; ++i) {
      for (int j = 0; j < dim_s; ++j) {
        Complex acc = 0;
        for (int k = 0; k < dim_r; ++k) acc += m(i * dim_r + k, j * dim_r + k);
        out(i, j) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_r, dim_r);
  for (int k = 0; k < dim_s; ++k) {
    out += m.block(k * dim_r, k * dim_r, dim_r, dim_r);
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: dimension mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return max_abs_diff(h, h.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs_diff(u.adjoint() * u, identity(static_cast<int>(u.rows()))) <=
         tol;
}

void require_hermitian(const ComplexMatrix& h, double tol, const char* what) {
  if (h.rows() != h.cols()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  if (!is_hermitian(h, tol)) {
    throw ValidationError(std::string(what) + ": matrix is not Hermitian");
  }
}

void require_unitary(const ComplexMatrix& u, double tol, const char* what) {
  if (u.rows() != u.cols()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  if (!is_unitary(u, tol)) {
    throw ValidationError(std::string(what) + ": matrix is not unitary");
  }
}

HermitianEigen herm_eig(const ComplexMatrix& h, double tol) {
  require_hermitian(h, tol, "herm_eig");
  const Eigen::MatrixXcd sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix unitary_from_hermitian(
    const ComplexMatrix& h, double scale, double tol) {
  const HermitianEigen eig = herm_eig(h, tol);
  Eigen::VectorXcd phases(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    phases(i) = std::polar(1.0, -scale * eig.values(i));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

double min_eigenvalue(const ComplexMatrix& h, double tol) {
  require_hermitian(h, tol, "min_eigenvalue");
  const Eigen::MatrixXcd sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("min_eigenvalue: eigensolver did not converge");
  }
  return solver.eigenvalues()(0);
}

bool is_psd(const ComplexMatrix& h, double tol) {
  return min_eigenvalue(h, tol) >= -tol;
}

Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum();
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_product: dimension mismatch");
  }
  return (a.transpose().cwiseProduct(b)).sum();
}

}  // namespace affmap
