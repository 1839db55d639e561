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

#include "affmap/linalg.hpp"
#include "affmap/random.hpp"
#include "support.hpp"

using namespace affmap;
using Catch::Matchers::WithinAbs;

TEST_CASE("pauli matrices match the hand-typed set", "[linalg]") {
  for (int k = 0; k < 4; ++k) {
    CHECK(max_abs_diff(pauli(k), oracle::sigma(k)) == 0.0);
  }
  CHECK_THROWS_AS(pauli(4), ValidationError);
}

TEST_CASE("kron agrees with the loop definition", "[linalg]") {
  Rng rng = make_rng(1);
  for (const auto& [ra, ca, rb, cb] :
       {std::array{2, 2, 3, 3}, std::array{3, 2, 2, 4}, std::array{1, 4, 4, 1}}) {
    const ComplexMatrix a = ginibre(rng, ra, ca);
    const ComplexMatrix b = ginibre(rng, rb, cb);
    CHECK(max_abs_diff(kron(a, b), oracle::kron(a, b)) < 1e-15);
  }
}

TEST_CASE("partial trace over either factor", "[linalg]") {
  Rng rng = make_rng(2);
  for (const auto& [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const ComplexMatrix x = ginibre(rng, n * m, n * m);
    CHECK(max_abs_diff(partial_trace(x, n, m, TraceSide::kRight),
                       oracle::trace_env(x, n, m)) < 1e-14);
    CHECK(max_abs_diff(partial_trace(x, n, m, TraceSide::kLeft),
                       oracle::trace_sys(x, n, m)) < 1e-14);
    // Tr_R[A ⊗ B] = A Tr B.
    const ComplexMatrix a = ginibre(rng, n, n);
    const ComplexMatrix b = ginibre(rng, m, m);
    CHECK(max_abs_diff(partial_trace(kron(a, b), n, m, TraceSide::kRight),
                       a * b.trace()) < 1e-13);
  }
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::Zero(5, 5), 2, 2, TraceSide::kRight),
                  DimensionError);
}

TEST_CASE("herm_eig reconstructs the matrix", "[linalg]") {
  Rng rng = make_rng(3);
  for (int dim : {2, 3, 4, 6}) {
    const ComplexMatrix h = random_hermitian(rng, dim);
    const HermitianEigen e = herm_eig(h);
    const ComplexMatrix back =
        e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK(max_abs_diff(back, h) < 1e-12);
    for (Eigen::Index i = 1; i < e.values.size(); ++i) {
      CHECK(e.values(i - 1) <= e.values(i));
    }
    CHECK_THAT(min_eigenvalue(h), WithinAbs(oracle::min_eig(h), 1e-12));
  }
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(herm_eig(bad), ValidationError);
}

TEST_CASE("unitary_from_hermitian is exp(-i s h)", "[linalg]") {
  Rng rng = make_rng(4);
  const ComplexMatrix h = random_hermitian(rng, 4);
  const ComplexMatrix u = unitary_from_hermitian(h, 0.7);
  CHECK(is_unitary(u, 1e-12));
  CHECK(max_abs_diff(u, oracle::expm_i(0.7 * h)) < 1e-12);
}

TEST_CASE("psd and unitarity predicates", "[linalg]") {
  CHECK(is_psd(identity(3)));
  CHECK(is_psd(ComplexMatrix::Zero(2, 2)));
  ComplexMatrix m = identity(2);
  m(1, 1) = -1e-10;
  CHECK(is_psd(m, 1e-9));
  CHECK_FALSE(is_psd(m, 1e-11));
  CHECK(is_unitary(pauli(2)));
  CHECK_FALSE(is_unitary(2.0 * identity(2)));
  CHECK_THROWS_AS(require_unitary(2.0 * identity(2), 1e-9, "u"), ValidationError);
}

TEST_CASE("inner products", "[linalg]") {
  Rng rng = make_rng(5);
  const ComplexMatrix a = ginibre(rng, 3, 3);
  const ComplexMatrix b = ginibre(rng, 3, 3);
  CHECK(std::abs(inner(a, b) - (a.adjoint() * b).trace()) < 1e-13);
  CHECK(std::abs(trace_product(a, b) - (a * b).trace()) < 1e-13);
}

TEST_CASE("random generators", "[linalg][random]") {
  Rng a = make_rng(9, 3);
  Rng b = make_rng(9, 3);
  CHECK(max_abs_diff(random_unitary(a, 4), random_unitary(b, 4)) == 0.0);
  Rng rng = make_rng(10);
  for (int i = 0; i < 20; ++i) {
    CHECK(is_unitary(random_unitary(rng, 3), 1e-12));
    const ComplexMatrix rho = random_density_matrix(rng, 4);
    CHECK(is_psd(rho, 1e-12));
    CHECK_THAT(rho.trace().real(), WithinAbs(1.0, 1e-12));
    CHECK(random_in_ball(rng, 3).norm() <= 1.0);
    CHECK_THAT(random_unit_vector(rng, 3).norm(), WithinAbs(1.0, 1e-12));
  }
  const ComplexMatrix pure = random_density_matrix(rng, 4, 1);
  CHECK_THAT((pure * pure).trace().real(), WithinAbs(1.0, 1e-12));
}
