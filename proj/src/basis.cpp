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

#include "affmap/basis.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace affmap {

namespace {

// Imaginary residue of Tr[F X] above this means the input was not Hermitian.
constexpr double kImagResidue = 1e-9;

}  // namespace

HermitianBasis::HermitianBasis(int dim) : dim_(dim) {
  using namespace std::complex_literals;
  if (dim < 2) {
    throw ValidationError(
        "build_basis: dimension must be at least 2, got " +
        std::to_string(dim));
  }
  const double scale = std::sqrt(dim / 2.0);
  mats_.reserve(static_cast<std::size_t>(dim) * dim);
  mats_.push_back(identity(dim));
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
      s(j, k) = scale;
      s(k, j) = scale;
      mats_.push_back(std::move(s));
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
      a(j, k) = -1i * scale;
      a(k, j) = 1i * scale;
      mats_.push_back(std::move(a));
    }
  }
  for (int l = 1; l < dim; ++l) {
    ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
    const double norm = scale * std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) d(j, j) = norm;
    d(l, l) = -l * norm;
    mats_.push_back(std::move(d));
  }
}

HermitianBasis build_basis(int n) { return HermitianBasis(n); }

ProductBasis::ProductBasis(int n, int m)
    : ProductBasis(HermitianBasis(n), HermitianBasis(m)) {}

ProductBasis::ProductBasis(HermitianBasis basis_s, HermitianBasis basis_r)
    : basis_s_(std::move(basis_s)), basis_r_(std::move(basis_r)) {
  products_.reserve(static_cast<std::size_t>(size_s()) * size_r());
  for (int mu = 0; mu < size_s(); ++mu) {
    for (int nu = 0; nu < size_r(); ++nu) {
      products_.push_back(kron(basis_s_[mu], basis_r_[nu]));
    }
  }
}

JointStateCoeffs JointStateCoeffs::zeros(int n, int m) {
  JointStateCoeffs c;
  c.n = n;
  c.m = m;
  c.coeff = RealMatrix::Zero(n * n, m * m);
  c.coeff(0, 0) = 1.0;
  c.free_mask = BoolMatrix::Constant(n * n, m * m, false);
  return c;
}

void JointStateCoeffs::validate() const {
  if (n < 2 || m < 2) {
    throw ValidationError("coefficients: subsystem dimensions must be >= 2");
  }
  if (coeff.rows() != n * n || coeff.cols() != m * m) {
    throw DimensionError("coefficients: coeff must be N² x M²");
  }
  if (free_mask.rows() != n * n || free_mask.cols() != m * m) {
    throw DimensionError("coefficients: free_mask must be N² x M²");
  }
  if (free_mask(0, 0)) {
    throw ValidationError("coefficients: entry (0,0) must be fixed");
  }
  if (std::abs(coeff(0, 0) - 1.0) > kDefaultTol) {
    throw ValidationError("coefficients: entry (0,0) must equal 1");
  }
}

RealMatrix coefficients_of(const ComplexMatrix& x, const ProductBasis& pb) {
  RealMatrix c(pb.size_s(), pb.size_r());
  for (int a = 0; a < pb.size_s(); ++a) {
    for (int b = 0; b < pb.size_r(); ++b) {
      c(a, b) = trace_product(pb.element(a, b), x).real();
    }
  }
  return c;
}

ComplexMatrix matrix_from_coefficients(
    const RealMatrix& c, const ProductBasis& pb) {
  ComplexMatrix x = ComplexMatrix::Zero(pb.dim(), pb.dim());
  for (int a = 0; a < pb.size_s(); ++a) {
    for (int b = 0; b < pb.size_r(); ++b) {
      if (c(a, b) != 0.0) x += c(a, b) * pb.element(a, b);
    }
  }
  return x / static_cast<double>(pb.dim());
}

JointStateCoeffs expand_state(
    const ComplexMatrix& pi, const ProductBasis& pb, double tol) {
  if (pi.rows() != pb.dim() || pi.cols() != pb.dim()) {
    throw DimensionError(
        "expand_state: state must be " + std::to_string(pb.dim()) + " square");
  }
  require_hermitian(pi, tol, "expand_state");
  if (std::abs(pi.trace() - 1.0) > tol) {
    throw ValidationError("expand_state: state must have unit trace");
  }
  JointStateCoeffs out = JointStateCoeffs::zeros(pb.n(), pb.m());
  for (int a = 0; a < pb.size_s(); ++a) {
    for (int b = 0; b < pb.size_r(); ++b) {
      const Complex v = trace_product(pb.element(a, b), pi);
      if (std::abs(v.imag()) > kImagResidue) {
        throw ValidationError(
            "expand_state: complex mean value, input is not Hermitian");
      }
      out.coeff(a, b) = v.real();
    }
  }
  out.coeff(0, 0) = 1.0;
  return out;
}

ComplexMatrix reconstruct_state(
    const JointStateCoeffs& c, const ProductBasis& pb) {
  c.validate();
  if (c.n != pb.n() || c.m != pb.m()) {
    throw DimensionError("reconstruct_state: basis dimension mismatch");
  }
  if (!c.fully_fixed()) {
    throw ValidationError(
        "reconstruct_state: " + std::to_string(c.free_count()) +
        " coefficient(s) are free; a full specification is required");
  }
  return matrix_from_coefficients(c.coeff, pb);
}

RealVector marginal_coeffs(const JointStateCoeffs& c) {
  const int count = c.n * c.n - 1;
  RealVector a(count);
  for (int alpha = 1; alpha <= count; ++alpha) {
    if (c.free_mask(alpha, 0)) {
      throw ValidationError("marginal_coeffs: marginal entries must be fixed");
    }
    a(alpha - 1) = c.coeff(alpha, 0);
  }
  return a;
}

ComplexMatrix state_from_bloch(const RealVector& a, const HermitianBasis& b) {
  if (a.size() != b.size() - 1) {
    throw DimensionError(
        "state_from_bloch: expected " + std::to_string(b.size() - 1) +
        " components, got " + std::to_string(a.size()));
  }
  ComplexMatrix rho = b[0];
  for (int alpha = 1; alpha < b.size(); ++alpha) rho += a(alpha - 1) * b[alpha];
  return rho / static_cast<double>(b.dim());
}

RealVector bloch_of(const ComplexMatrix& rho, const HermitianBasis& b) {
  if (rho.rows() != b.dim() || rho.cols() != b.dim()) {
    throw DimensionError("bloch_of: dimension mismatch");
  }
  RealVector a(b.size() - 1);
  for (int alpha = 1; alpha < b.size(); ++alpha) {
    a(alpha - 1) = trace_product(b[alpha], rho).real();
  }
  return a;
}

TransferMatrix transfer_matrix(
    const ComplexMatrix& u, const ProductBasis& pb, double tol) {
  if (u.rows() != pb.dim()) {
    throw DimensionError("transfer_matrix: unitary dimension mismatch");
  }
  require_unitary(u, tol, "transfer_matrix");
  const int size = pb.size_s() * pb.size_r();
  TransferMatrix out{pb.n(), pb.m(), RealMatrix(size, size)};
  const double norm = 1.0 / pb.dim();
  for (int mu = 0; mu < pb.size_s(); ++mu) {
    for (int nu = 0; nu < pb.size_r(); ++nu) {
      const ComplexMatrix heis = u.adjoint() * pb.element(mu, nu) * u;
      for (int a = 0; a < pb.size_s(); ++a) {
        for (int b = 0; b < pb.size_r(); ++b) {
          out.t(mu * pb.size_r() + nu, a * pb.size_r() + b) =
              norm * trace_product(pb.element(a, b), heis).real();
        }
      }
    }
  }
  return out;
}

}  // namespace affmap
