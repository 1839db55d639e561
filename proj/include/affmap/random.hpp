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

#include <cstdint>
#include <random>

#include "affmap/linalg.hpp"

namespace affmap {

using Rng = std::mt19937_64;

/// Independent stream for item `index` of a run seeded with `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t index = 0);

double uniform(Rng& rng, double lo = 0.0, double hi = 1.0);

/// Complex matrix with i.i.d. standard normal real and imaginary parts.
ComplexMatrix ginibre(Rng& rng, int rows, int cols);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix random_unitary(Rng& rng, int dim);

/// Random Hermitian matrix with unit-scale entries.
ComplexMatrix random_hermitian(Rng& rng, int dim);

/// Random density matrix of the given rank (Hilbert-Schmidt measure when
/// rank == dim). rank <= 0 picks a rank uniformly in 1..dim.
ComplexMatrix random_density_matrix(Rng& rng, int dim, int rank = 0);

/// Uniform point in the closed unit ball of R^dim.
RealVector random_in_ball(Rng& rng, int dim);

/// Uniform unit vector in R^dim.
RealVector random_unit_vector(Rng& rng, int dim);

}  // namespace affmap
