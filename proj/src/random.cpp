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

#include "affmap/random.hpp"

#include <Eigen/QR>
#include <cmath>

namespace affmap {

Rng make_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(index),
      static_cast<std::uint32_t>(index >> 32), 0x5eedu};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

ComplexMatrix ginibre(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    g.data()[i] = Complex(re, im);
  }
  return g;
}

ComplexMatrix random_unitary(Rng& rng, int dim) {
  const Eigen::MatrixXcd z = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(Rng& rng, int dim) {
  const ComplexMatrix g = ginibre(rng, dim, dim);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_density_matrix(Rng& rng, int dim, int rank) {
  if (rank <= 0) {
    std::uniform_int_distribution<int> pick(1, dim);
    rank = pick(rng);
  }
  const ComplexMatrix g = ginibre(rng, dim, rank);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

RealVector random_unit_vector(Rng& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RealVector v(dim);
  do {
    for (int i = 0; i < dim; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-12);
  return v / v.norm();
}

RealVector random_in_ball(Rng& rng, int dim) {
  const RealVector dir = random_unit_vector(rng, dim);
  const double radius = std::pow(uniform(rng), 1.0 / dim);
  return radius * dir;
}

}  // namespace affmap
