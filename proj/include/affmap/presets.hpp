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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affmap/domains.hpp"
#include "affmap/qubit2.hpp"

namespace affmap::presets {

/// Two-qubit spec with <ξ_k> = 1/4 and <σ_j ξ_k> = 1/4 for j ≠ k. The
/// diagonal correlations <σ_j ξ_j> are free when diagonal_free, else 0.
JointStateCoeffs fig1_spec(bool diagonal_free);

/// γ = (2√5, 2√3, 2√2).
qubit2::IntHamParams fig1a_params();

/// <ξ1> = <σ3 ξ1> = 1/√3, every other mean value 0.
JointStateCoeffs fig2_spec();

struct PresetOptions {
  int resolution = 101;  // plane grid points per side
  int shells = 12;       // Fibonacci shells for the whole-domain cloud
  int curve_points = 361;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  int max_iter = 10000;
  /// Directory for CSV and JSON output; nothing is written when empty.
  std::string out_dir;
};

struct PresetResult {
  std::string name;
  /// Keyed by file stem, e.g. "fig1_partial_p1p2".
  std::map<std::string, DomainSample> samples;
  /// Keyed by file stem, e.g. "fig1a_image_sphere_p1p2".
  std::map<std::string, std::vector<ImagePoint>> images;
  std::optional<AffineMap> map;
  std::vector<std::string> files;
};

/// Runs "fig1", "fig1a" or "fig2". Each CSV gets a JSON sidecar with the
/// spec, the map (or null), seed, resolution and label counts.
PresetResult run_preset(const std::string& name, const PresetOptions& options);

std::vector<std::string> preset_names();

}  // namespace affmap::presets
