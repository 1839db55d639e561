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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "affmap/basis.hpp"
#include "affmap/maps.hpp"

namespace affmap {

/// A joint-state specification plus a subsystem Bloch-type vector to test.
/// The probe overwrites the spec's <F_{α0}> entries and marks them fixed.
struct DomainQuery {
  JointStateCoeffs spec;
  RealVector probe;
};

/// spec with coeff(α, 0) = probe(α - 1) for α ≥ 1, all marked fixed.
JointStateCoeffs apply_probe(const JointStateCoeffs& spec, const RealVector& probe);

/// Reconstructed joint matrix is PSD within tol. Throws ValidationError when
/// free entries remain after the probe is applied.
bool is_compatible_full(const DomainQuery& q, double tol = kDefaultTol);

enum class Feasibility { kFeasible, kInfeasible, kUnknown };

std::string to_string(Feasibility f);

struct PartialResult {
  Feasibility status = Feasibility::kUnknown;
  /// Last iterate on the affine set; PSD within tol when feasible.
  ComplexMatrix witness;
  int iterations = 0;
  /// Frobenius distance between the last affine and cone iterates.
  double distance = 0.0;
};

/// Decides whether the free coefficients can be completed to a PSD joint
/// state, by alternating projections between the affine set of matrices with
/// the fixed coefficients and the PSD cone.
///
/// Feasible once the affine iterate has min eigenvalue >= -tol. Infeasible
/// once the cone step yields a separating certificate: the PSD gap matrix Z,
/// with its free components removed and shifted to be PSD, has
/// Tr[Z X] < -tol·Tr[Z] on the whole affine set, which rules out every
/// completion with min eigenvalue >= -tol. Unknown after max_iter.
PartialResult is_compatible_partial(
    const DomainQuery& q, double tol = kDefaultTol, int max_iter = 10000);

/// L(ρ) + K is PSD within tol, ρ = (1/N)(I + Σ probe_α F_{α0}). Throws
/// ValidationError when ρ itself is not PSD.
bool is_in_positivity_domain(
    const AffineMap& map, const RealVector& probe, double tol = kDefaultTol);

/// Coordinate plane through the origin spanned by probe axes u and v
/// (zero-based).
struct Section {
  int u = 0;
  int v = 1;

  /// "p1p2", "p1p3", "p2p3", ... (one-based axis labels).
  static Section parse(const std::string& name);
  std::string name() const;
};

enum class SampleRegion { kGrid, kRandom };

struct SampleOptions {
  SampleRegion region = SampleRegion::kGrid;
  std::optional<Section> section;
  /// Grid points per side for plane sections; number of Fibonacci shells for
  /// volumes.
  int resolution = 101;
  /// Number of points for random sampling.
  int count = 0;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  int max_iter = 10000;
};

enum CompatFlag : int { kCompatOut = 0, kCompatIn = 1, kCompatUnknown = -1 };

struct DomainPoint {
  RealVector probe;
  int compat = kCompatUnknown;
  int pos = 0;
};

struct DomainSample {
  std::vector<DomainPoint> points;
  SampleOptions options;
  bool partial = false;  // compatibility decided by is_compatible_partial
};

/// Probe points for the requested region, in output order. Grid sections
/// cover [-r, r]² clipped to the closed disk of radius r = sqrt(N - 1);
/// volume grids are Fibonacci-sphere shells (qubits only) plus the origin.
std::vector<RealVector> sample_probes(int n, const SampleOptions& options);

/// Labels every probe with compatibility (partial solver when the spec has
/// free entries) and positivity flags. Without a map the positivity flag
/// reports whether the probe itself is a valid state.
DomainSample sample_domain(
    const JointStateCoeffs& spec, const AffineMap* map,
    const SampleOptions& options);

struct ImagePoint {
  RealVector input;
  RealVector output;
};

/// Images a ↦ a^U of the unit circle in the section plane (qubit maps).
std::vector<ImagePoint> image_of_ball(
    const AffineMap& map, const Section& section, int resolution);

/// "%.9g" formatting used by every CSV writer.
std::string format_real(double value);

/// Header a1,...,aK,compat,pos then one row per point.
void write_domain_csv(std::ostream& out, const DomainSample& sample);

/// Header in1,in2,in3,out1,out2,out3 then one row per point.
void write_image_csv(std::ostream& out, const std::vector<ImagePoint>& points);

}  // namespace affmap
