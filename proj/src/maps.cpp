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

#include "affmap/maps.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace affmap {

namespace {

int isqrt_exact(std::size_t value) {
  const int root = static_cast<int>(std::lround(std::sqrt(double(value))));
  if (static_cast<std::size_t>(root) * root != value) return -1;
  return root;
}

ComplexMatrix unit_matrix(int n, int j, int k) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(j, k) = 1.0;
  return e;
}

}  // namespace

AffineMap::AffineMap(
    std::vector<ComplexMatrix> g_ops, ComplexMatrix k, double tol)
    : n_(static_cast<int>(k.rows())),
      m_(isqrt_exact(g_ops.size())),
      g_ops_(std::move(g_ops)),
      k_(std::move(k)),
      basis_s_(n_ >= 2 ? n_ : 2) {
  if (n_ < 2 || k_.cols() != n_) {
    throw DimensionError("AffineMap: K must be square with N >= 2");
  }
  if (m_ < 2) {
    throw DimensionError(
        "AffineMap: the number of G operators must be M² with M >= 2");
  }
  ComplexMatrix gdg = ComplexMatrix::Zero(n_, n_);
  ComplexMatrix ggd = ComplexMatrix::Zero(n_, n_);
  for (const auto& g : g_ops_) {
    if (g.rows() != n_ || g.cols() != n_) {
      throw DimensionError("AffineMap: every G operator must be N x N");
    }
    gdg += g.adjoint() * g;
    ggd += g * g.adjoint();
  }
  if (!approx_equal(gdg, identity(n_), tol) ||
      !approx_equal(ggd, identity(n_), tol)) {
    throw ValidationError(
        "AffineMap: G operators violate the completeness relations");
  }
  require_hermitian(k_, tol, "AffineMap K");
  if (std::abs(k_.trace()) > tol) {
    throw ValidationError("AffineMap: K must be traceless");
  }
  one_prime_ = identity(n_) + static_cast<double>(n_) * k_;
  f_primes_.reserve(static_cast<std::size_t>(basis_s_.size() - 1));
  for (int alpha = 1; alpha < basis_s_.size(); ++alpha) {
    f_primes_.push_back(apply_L(*this, basis_s_[alpha]));
  }
}

ComplexMatrix BMatrix::apply(const ComplexMatrix& q) const {
  if (q.rows() != n || q.cols() != n) {
    throw DimensionError("BMatrix::apply: dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      Complex acc = 0;
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) acc += b(r * n + j, s * n + k) * q(j, k);
      }
      out(r, s) = acc;
    }
  }
  return out;
}

ComplexMatrix PmDecomposition::apply(const ComplexMatrix& q) const {
  ComplexMatrix out = ComplexMatrix::Zero(q.rows(), q.cols());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    out += static_cast<double>(signs[i]) * (ops[i] * q * ops[i].adjoint());
  }
  return out;
}

void require_density_matrix(
    const ComplexMatrix& pi, double tol, const char* what) {
  require_hermitian(pi, tol, what);
  if (std::abs(pi.trace() - 1.0) > tol) {
    throw ValidationError(std::string(what) + ": trace must be 1");
  }
  if (!is_psd(pi, tol)) {
    throw ValidationError(std::string(what) + ": state is not positive");
  }
}

std::vector<ComplexMatrix> extract_G(
    const ComplexMatrix& u, const HermitianBasis& basis_r, double tol) {
  const int m = basis_r.dim();
  if (u.rows() % m != 0 || u.rows() / m < 2) {
    throw DimensionError("extract_G: unitary dimension is not N·M");
  }
  require_unitary(u, tol, "extract_G");
  const int n = static_cast<int>(u.rows()) / m;
  std::vector<ComplexMatrix> g;
  g.reserve(static_cast<std::size_t>(basis_r.size()));
  const ComplexMatrix id_s = identity(n);
  for (int nu = 0; nu < basis_r.size(); ++nu) {
    g.push_back(
        partial_trace(u * kron(id_s, basis_r[nu]), n, m, TraceSide::kRight) /
        static_cast<double>(m));
  }
  return g;
}

ComplexMatrix extract_K(
    const ComplexMatrix& u, const ComplexMatrix& pi, const ProductBasis& pb,
    double tol) {
  if (u.rows() != pb.dim() || pi.rows() != pb.dim()) {
    throw DimensionError("extract_K: dimension mismatch with basis");
  }
  require_unitary(u, tol, "extract_K");
  require_density_matrix(pi, tol, "extract_K");
  const int n = pb.n();
  const int m = pb.m();
  const ComplexMatrix rho = partial_trace(pi, n, m, TraceSide::kRight);
  const ComplexMatrix diff =
      pi - kron(rho, identity(m) / static_cast<double>(m));
  ComplexMatrix k = ComplexMatrix::Zero(n, n);
  for (int mu = 1; mu < pb.size_s(); ++mu) {
    const ComplexMatrix heis = u.adjoint() * pb.element(mu, 0) * u;
    const double weight = trace_product(heis, diff).real();
    k += weight * pb.basis_s()[mu];
  }
  return k / static_cast<double>(n);
}

AffineMap map_from_unitary(
    const ComplexMatrix& u, const ComplexMatrix& pi, const ProductBasis& pb,
    double tol) {
  return AffineMap(extract_G(u, pb.basis_r(), tol), extract_K(u, pi, pb, tol));
}

ComplexMatrix apply_L(const AffineMap& map, const ComplexMatrix& q) {
  if (q.rows() != map.n() || q.cols() != map.n()) {
    throw DimensionError("apply_L: dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(map.n(), map.n());
  for (const auto& g : map.g_ops()) out += g * q * g.adjoint();
  return out;
}

ComplexMatrix apply_affine(
    const AffineMap& map, const ComplexMatrix& rho, double tol) {
  if (rho.rows() != map.n() || rho.cols() != map.n()) {
    throw DimensionError("apply_affine: dimension mismatch");
  }
  require_hermitian(rho, tol, "apply_affine");
  if (std::abs(rho.trace() - 1.0) > tol) {
    throw ValidationError("apply_affine: trace must be 1");
  }
  return apply_L(map, rho) + map.k();
}

ComplexMatrix linear_extension(const AffineMap& map, const ComplexMatrix& q) {
  return apply_L(map, q) + map.k() * q.trace();
}

BMatrix b_matrix(const AffineMap& map) {
  const int n = map.n();
  BMatrix out{n, ComplexMatrix::Zero(n * n, n * n)};
  for (const auto& g : map.g_ops()) {
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < n; ++j) {
        for (int s = 0; s < n; ++s) {
          for (int k = 0; k < n; ++k) {
            out.b(r * n + j, s * n + k) += g(r, j) * std::conj(g(s, k));
          }
        }
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      for (int j = 0; j < n; ++j) out.b(r * n + j, s * n + j) += map.k()(r, s);
    }
  }
  return out;
}

ChoiMatrix choi_matrix(const AffineMap& map) {
  const int n = map.n();
  ChoiMatrix out{n, ComplexMatrix::Zero(n * n, n * n)};
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      out.c.block(j * n, k * n, n, n) =
          linear_extension(map, unit_matrix(n, j, k));
    }
  }
  return out;
}

ChoiMatrix choi_from_b(const BMatrix& b) {
  const int n = b.n;
  ChoiMatrix out{n, ComplexMatrix(n * n, n * n)};
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < n; ++s) {
        for (int k = 0; k < n; ++k) {
          out.c(j * n + r, k * n + s) = b.b(r * n + j, s * n + k);
        }
      }
    }
  }
  return out;
}

BMatrix b_from_choi(const ChoiMatrix& choi) {
  const int n = choi.n;
  BMatrix out{n, ComplexMatrix(n * n, n * n)};
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < n; ++s) {
        for (int k = 0; k < n; ++k) {
          out.b(r * n + j, s * n + k) = choi.c(j * n + r, k * n + s);
        }
      }
    }
  }
  return out;
}

CpCheck choi_and_cp(const AffineMap& map, double tol) {
  CpCheck out;
  out.choi = choi_matrix(map);
  out.eigenvalues = herm_eig(out.choi.c, 1e-8).values;
  out.is_cp = out.eigenvalues(0) >= -tol;
  return out;
}

PmDecomposition pm_decomposition(const AffineMap& map, double tol) {
  const int n = map.n();
  const HermitianEigen eig = herm_eig(choi_matrix(map).c, 1e-8);
  PmDecomposition out;
  std::vector<ComplexMatrix> negative;
  // Largest eigenvalues first so positive operators come out in
  // decreasing weight.
  for (Eigen::Index i = eig.values.size() - 1; i >= 0; --i) {
    const double lambda = eig.values(i);
    if (std::abs(lambda) <= tol) continue;
    ComplexMatrix c(n, n);
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < n; ++r) c(r, j) = eig.vectors(j * n + r, i);
    }
    c *= std::sqrt(std::abs(lambda));
    if (lambda > 0) {
      out.ops.push_back(std::move(c));
      out.signs.push_back(1);
    } else {
      negative.push_back(std::move(c));
    }
  }
  out.positive_count = static_cast<int>(out.ops.size());
  for (auto& c : negative) {
    out.ops.push_back(std::move(c));
    out.signs.push_back(-1);
  }
  return out;
}

double purity_delta(
    const AffineMap& map, const ComplexMatrix& rho, double tol) {
  const ComplexMatrix out = apply_affine(map, rho, tol);
  return trace_product(out, out).real() - trace_product(rho, rho).real();
}

double mean_value_correction(
    const ComplexMatrix& a, const ComplexMatrix& u, const ComplexMatrix& pi,
    double tol) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw DimensionError("mean_value_correction: observable must be square");
  }
  const int n = static_cast<int>(a.rows());
  if (pi.rows() != pi.cols() || pi.rows() % n != 0 || u.rows() != pi.rows()) {
    throw DimensionError("mean_value_correction: dimension mismatch");
  }
  require_hermitian(a, tol, "mean_value_correction");
  require_unitary(u, tol, "mean_value_correction");
  const int m = static_cast<int>(pi.rows()) / n;
  const ComplexMatrix rho = partial_trace(pi, n, m, TraceSide::kRight);
  const ComplexMatrix diff =
      pi - kron(rho, identity(m) / static_cast<double>(m));
  const ComplexMatrix heis = u.adjoint() * kron(a, identity(m)) * u;
  return trace_product(heis, diff).real();
}

}  // namespace affmap
