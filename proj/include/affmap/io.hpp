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

#include <json.hpp>
#include <string>
#include <vector>

#include "affmap/basis.hpp"
#include "affmap/maps.hpp"
#include "affmap/qubit2.hpp"
#include "affmap/tomography.hpp"

namespace affmap::io {

using Json = nlohmann::json;

/// Complex scalars are [re, im] pairs. Readers also accept plain numbers.
Json to_json(Complex z);
Json to_json(const ComplexMatrix& m);
Json to_json(const RealMatrix& m);
Json to_json(const RealVector& v);
Json to_json(const JointStateCoeffs& c);
Json to_json(const qubit2::Rotation& r);
Json to_json(const std::vector<ProbePair>& pairs);

/// {"n", "m", "g_ops", "k", "one_prime", "f_primes", "b_matrix"}.
Json map_to_json(const AffineMap& map);

Complex complex_from_json(const Json& j);
ComplexMatrix complex_matrix_from_json(const Json& j);
RealMatrix real_matrix_from_json(const Json& j);
RealVector real_vector_from_json(const Json& j);

/// {"n", "m", "coeff", "free_mask"}; free_mask is optional (all fixed).
JointStateCoeffs spec_from_json(const Json& j);

/// Rebuilds the map from "g_ops" and "k"; the derived fields are ignored.
AffineMap map_from_json(const Json& j);

qubit2::Rotation rotation_from_json(const Json& j);
std::vector<ProbePair> pairs_from_json(const Json& j);

/// Parse errors and missing keys are reported as ValidationError.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace affmap::io
