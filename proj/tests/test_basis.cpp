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

#include <catch_amalgamated.hpp>

#include "affmap/basis.hpp"
#include "affmap/random.hpp"
#include "support.hpp"

using namespace affmap;
using Catch::Matchers::WithinAbs;

TEST_CASE("hermitian basis is trace-orthogonal with norm N", "[basis]") {
  for (int n = 2; n <= 5; ++n) {
    const HermitianBasis b(n);
    REQUIRE(b.size() == n * n);
    CHECK(max_abs_diff(b[0], identity(n)) == 0.0);
    for (int a = 0; a < b.size(); ++a) {
      CHECK(is_hermitian(b[a], 1e-15));
      if (a > 0) CHECK(std::abs(b[a].trace()) < 1e-14);
      for (int c = 0; c < b.size(); ++c) {
        const Complex t = (b[a] * b[c]).trace();
        CHECK(std::abs(t - (a == c ? Complex(n) : Complex(0.0))) < 1e-13);
      }
    }
  }
  CHECK_THROWS_AS(HermitianBasis(1), ValidationError);
}

TEST_CASE("qubit basis is I and the Pauli matrices", "[basis]") {
  const HermitianBasis b(2);
  for (int k = 0; k < 4; ++k) {
    CHECK(max_abs_diff(b[k], oracle::sigma(k)) < 1e-15);
  }
}

TEST_CASE("qutrit basis spans all 3x3 matrices", "[basis]") {
  // Expanding random matrices in the basis must reproduce them exactly.
  const HermitianBasis b(3);
  Rng rng = make_rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix x = ginibre(rng, 3, 3);
    ComplexMatrix back = ComplexMatrix::Zero(3, 3);
    for (int a = 0; a < b.size(); ++a) back += (b[a] * x).trace() * b[a] / 3.0;
    CHECK(max_abs_diff(back, x) < 1e-13);
  }
}

TEST_CASE("product basis elements are Kronecker products", "[basis]") {
  const ProductBasis pb(2, 3);
  CHECK(pb.size_s() == 4);
  CHECK(pb.size_r() == 9);
  CHECK(pb.dim() == 6);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 9; ++nu) {
      CHECK(max_abs_diff(pb.element(mu, nu),
                         oracle::kron(pb.basis_s()[mu], pb.basis_r()[nu])) == 0.0);
    }
  }
}

TEST_CASE("expand and reconstruct are inverse", "[basis]") {
  Rng rng = make_rng(12);
  for (const auto& [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const ProductBasis pb(n, m);
    const ComplexMatrix pi = random_density_matrix(rng, n * m);
    const JointStateCoeffs c = expand_state(pi, pb);
    CHECK(c.fully_fixed());
    CHECK(c.coeff(0, 0) == 1.0);
    CHECK(max_abs_diff(reconstruct_state(c, pb), pi) < 1e-14);
    // Marginal coefficients are the subsystem Bloch-type vector.
    const ComplexMatrix rho = oracle::trace_env(pi, n, m);
    const RealVector a = marginal_coeffs(c);
    CHECK(max_abs_diff(state_from_bloch(a, pb.basis_s()), rho) < 1e-14);
    CHECK((bloch_of(rho, pb.basis_s()) - a).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("two-qubit coefficients are Pauli mean values", "[basis]") {
  Rng rng = make_rng(13);
  const ProductBasis pb(2, 2);
  const ComplexMatrix pi = random_density_matrix(rng, 4);
  const JointStateCoeffs c = expand_state(pi, pb);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      CHECK_THAT(c.coeff(j, k), WithinAbs(oracle::mean(pi, j, k), 1e-14));
    }
  }
}

TEST_CASE("coefficient validation", "[basis]") {
  JointStateCoeffs c = JointStateCoeffs::zeros(2, 2);
  CHECK_NOTHROW(c.validate());
  c.coeff(0, 0) = 0.5;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = JointStateCoeffs::zeros(2, 2);
  c.free_mask(0, 0) = true;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = JointStateCoeffs::zeros(2, 2);
  c.coeff = RealMatrix::Zero(4, 3);
  CHECK_THROWS_AS(c.validate(), DimensionError);
  c = JointStateCoeffs::zeros(2, 2);
  c.free_mask(1, 2) = true;
  CHECK(c.free_count() == 1);
  CHECK_THROWS_AS(reconstruct_state(c, ProductBasis(2, 2)), ValidationError);

  ComplexMatrix not_unit = identity(4);
  CHECK_THROWS_AS(expand_state(not_unit, ProductBasis(2, 2)), ValidationError);
  ComplexMatrix not_herm = identity(4) / 4.0;
  not_herm(0, 1) = 0.1;
  CHECK_THROWS_AS(expand_state(not_herm, ProductBasis(2, 2)), ValidationError);
}

TEST_CASE("transfer matrix is orthogonal and composes", "[basis]") {
  Rng rng = make_rng(14);
  for (const auto& [n, m] : {std::pair{2, 2}, std::pair{2, 3}}) {
    const ProductBasis pb(n, m);
    const ComplexMatrix u1 = random_unitary(rng, n * m);
    const ComplexMatrix u2 = random_unitary(rng, n * m);
    const TransferMatrix t1 = transfer_matrix(u1, pb);
    const TransferMatrix t2 = transfer_matrix(u2, pb);
    const RealMatrix eye = RealMatrix::Identity(t1.t.rows(), t1.t.cols());
    CHECK((t1.t * t1.t.transpose() - eye).cwiseAbs().maxCoeff() < 1e-12);
    // t(0,0; 0,0) = 1 and the identity row/column is otherwise zero.
    CHECK_THAT(t1.at(0, 0, 0, 0), WithinAbs(1.0, 1e-13));
    CHECK(t1.t.row(0).tail(t1.t.cols() - 1).cwiseAbs().maxCoeff() < 1e-13);
    // U†F U = Σ t F, hence t(U1 U2) = t(U1) t(U2).
    const TransferMatrix t12 = transfer_matrix(u1 * u2, pb);
    CHECK((t12.t - t1.t * t2.t).cwiseAbs().maxCoeff() < 1e-12);
    // Direct expansion check for one element.
    const ComplexMatrix heis = u1.adjoint() * pb.element(1, 0) * u1;
    ComplexMatrix sum = ComplexMatrix::Zero(n * m, n * m);
    for (int a = 0; a < pb.size_s(); ++a)
      for (int b = 0; b < pb.size_r(); ++b) sum += t1.at(1, 0, a, b) * pb.element(a, b);
    CHECK(max_abs_diff(sum, heis) < 1e-12);
  }
  CHECK_THROWS_AS(transfer_matrix(2.0 * identity(4), ProductBasis(2, 2)),
                  ValidationError);
}
