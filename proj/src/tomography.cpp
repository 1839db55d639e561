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

#include "affmap/tomography.hpp"

#include <Eigen/QR>
#include <cmath>
#include <string>

#include "affmap/domains.hpp"
#include "affmap/parallel.hpp"

namespace affmap {

namespace {

constexpr int kMaxHalvings = 20;

bool admissible(const JointStateCoeffs& spec, const RealVector& probe,
                double tol) {
  const DomainQuery q{spec, probe};
  if (apply_probe(spec, probe).fully_fixed()) return is_compatible_full(q, tol);
  return is_compatible_partial(q, tol).status == Feasibility::kFeasible;
}

void check_output(const ComplexMatrix& out, int n, double tol) {
  if (out.rows() != n || out.cols() != n) {
    throw DimensionError("tomography: output state has wrong dimension");
  }
  require_hermitian(out, tol, "tomography output");
  if (std::abs(out.trace() - 1.0) > tol) {
    throw ValidationError("tomography: output state must have unit trace");
  }
}

}  // namespace

ProbeSet design_probes(
    const JointStateCoeffs& spec, const RealVector& base, double eps,
    double tol) {
  spec.validate();
  const int axes = spec.n * spec.n - 1;
  if (base.size() != axes) {
    throw DimensionError("design_probes: base must have N²-1 components");
  }
  if (!(eps > 0)) throw ValidationError("design_probes: eps must be positive");
  if (!admissible(spec, base, tol)) {
    throw InfeasibleError(
        "design_probes: base state is not in the compatibility domain");
  }
  ProbeSet out;
  out.n = spec.n;
  out.base = base;
  out.deltas = RealVector(axes);
  out.pairs.push_back({base, {}});
  for (int alpha = 0; alpha < axes; ++alpha) {
    double step = eps;
    bool found = false;
    for (int attempt = 0; attempt <= kMaxHalvings && !found; ++attempt) {
      for (const double sign : {1.0, -1.0}) {
        RealVector probe = base;
        probe(alpha) += sign * step;
        if (admissible(spec, probe, tol)) {
          out.deltas(alpha) = step;
          out.pairs.push_back({probe, {}});
          found = true;
          break;
        }
      }
      if (!found) step /= 2.0;
    }
    if (!found) {
      throw InfeasibleError(
          "design_probes: no admissible perturbation along axis " +
          std::to_string(alpha + 1) +
          " (the compatibility domain has no interior there)");
    }
  }
  return out;
}

void evaluate_probes(ProbeSet& probes, const EvolutionOracle& oracle) {
  parallel_for(probes.pairs.size(), [&](std::size_t i) {
    probes.pairs[i].rho_out = oracle(probes.pairs[i].rho_in_coeffs);
  });
}

EvolutionOracle map_oracle(const AffineMap& map) {
  return [map](const RealVector& a) {
    return apply_affine(map, state_from_bloch(a, map.basis_s()));
  };
}

EvolutionOracle joint_evolution_oracle(
    const JointStateCoeffs& spec, const ComplexMatrix& u) {
  const ProductBasis pb(spec.n, spec.m);
  require_unitary(u, kDefaultTol, "joint_evolution_oracle");
  if (u.rows() != pb.dim()) {
    throw DimensionError("joint_evolution_oracle: unitary dimension mismatch");
  }
  return [spec, u, pb](const RealVector& a) {
    const ComplexMatrix pi = reconstruct_state(apply_probe(spec, a), pb);
    return partial_trace(
        u * pi * u.adjoint(), pb.n(), pb.m(), TraceSide::kRight);
  };
}

ReconstructedMap reconstruct_map(const ProbeSet& probes, double tol) {
  const int n = probes.n;
  const int axes = n * n - 1;
  if (static_cast<int>(probes.pairs.size()) < axes + 1) {
    throw ValidationError("reconstruct_map: need a base pair and one per axis");
  }
  for (const auto& p : probes.pairs) {
    if (p.rho_in_coeffs.size() != axes) {
      throw DimensionError("reconstruct_map: input coefficient length");
    }
    check_output(p.rho_out, n, 1e-8);
  }
  const HermitianBasis basis(n);
  const ProbePair& base = probes.pairs.front();
  const double nd = n;

  ReconstructedMap out;
  out.n = n;
  out.f_primes.assign(static_cast<std::size_t>(axes), ComplexMatrix());
  for (int i = 1; i <= axes; ++i) {
    const ProbePair& p = probes.pairs[static_cast<std::size_t>(i)];
    const RealVector diff = p.rho_in_coeffs - base.rho_in_coeffs;
    Eigen::Index axis = -1;
    for (Eigen::Index a = 0; a < diff.size(); ++a) {
      if (diff(a) == 0.0) continue;
      if (axis >= 0) {
        throw ValidationError(
            "reconstruct_map: probe " + std::to_string(i) +
            " differs from the base along more than one axis");
      }
      axis = a;
    }
    if (axis < 0 || out.f_primes[static_cast<std::size_t>(axis)].size() != 0) {
      throw ValidationError(
          "reconstruct_map: probes must perturb each axis exactly once");
    }
    out.f_primes[static_cast<std::size_t>(axis)] =
        nd * (p.rho_out - base.rho_out) / diff(axis);
  }
  out.one_prime = nd * base.rho_out;
  for (int a = 0; a < axes; ++a) {
    out.one_prime -= base.rho_in_coeffs(a) * out.f_primes[static_cast<std::size_t>(a)];
  }
  out.k = (out.one_prime - identity(n)) / nd;

  for (std::size_t i = static_cast<std::size_t>(axes) + 1;
       i < probes.pairs.size(); ++i) {
    const ProbePair& p = probes.pairs[i];
    out.residual = std::max(
        out.residual,
        max_abs_diff(apply_reconstruction(out, p.rho_in_coeffs), p.rho_out));
  }
  if (out.residual > tol) {
    throw ValidationError(
        "reconstruct_map: pairs are inconsistent with a single affine map "
        "(residual " + format_real(out.residual) + ")");
  }
  return out;
}

ReconstructedMap reconstruct_map_lstsq(
    int n, const std::vector<ProbePair>& pairs, double tol) {
  const int axes = n * n - 1;
  const int rows = static_cast<int>(pairs.size());
  if (rows < axes + 1) {
    throw ValidationError("reconstruct_map_lstsq: too few pairs");
  }
  Eigen::MatrixXcd design(rows, axes + 1);
  Eigen::MatrixXcd target(rows, n * n);
  for (int i = 0; i < rows; ++i) {
    const ProbePair& p = pairs[static_cast<std::size_t>(i)];
    if (p.rho_in_coeffs.size() != axes) {
      throw DimensionError("reconstruct_map_lstsq: input coefficient length");
    }
    check_output(p.rho_out, n, 1e-8);
    design(i, 0) = 1.0;
    for (int a = 0; a < axes; ++a) design(i, a + 1) = p.rho_in_coeffs(a);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        target(i, r * n + s) = static_cast<double>(n) * p.rho_out(r, s);
      }
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(design);
  if (qr.rank() < axes + 1) {
    throw ValidationError(
        "reconstruct_map_lstsq: input states do not span the state space");
  }
  const Eigen::MatrixXcd solution = qr.solve(target);
  auto unpack = [&](int row) {
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) m(r, s) = solution(row, r * n + s);
    }
    return m;
  };
  ReconstructedMap out;
  out.n = n;
  out.one_prime = unpack(0);
  for (int a = 0; a < axes; ++a) out.f_primes.push_back(unpack(a + 1));
  out.k = (out.one_prime - identity(n)) / static_cast<double>(n);
  for (const auto& p : pairs) {
    out.residual = std::max(
        out.residual,
        max_abs_diff(apply_reconstruction(out, p.rho_in_coeffs), p.rho_out));
  }
  if (out.residual > tol) {
    throw ValidationError(
        "reconstruct_map_lstsq: pairs are inconsistent with a single affine "
        "map (residual " + format_real(out.residual) + ")");
  }
  return out;
}

ValidationReport validate_reconstruction(
    const ReconstructedMap& recon, const AffineMap& truth, double tol) {
  if (recon.n != truth.n() ||
      recon.f_primes.size() != truth.f_primes().size()) {
    throw DimensionError("validate_reconstruction: dimension mismatch");
  }
  ValidationReport r;
  r.one_prime_dev = max_abs_diff(recon.one_prime, truth.one_prime());
  for (std::size_t a = 0; a < recon.f_primes.size(); ++a) {
    r.f_prime_dev = std::max(
        r.f_prime_dev, max_abs_diff(recon.f_primes[a], truth.f_primes()[a]));
  }
  r.k_dev = max_abs_diff(recon.k, truth.k());
  r.max_dev = std::max({r.one_prime_dev, r.f_prime_dev, r.k_dev});
  r.pass = r.max_dev <= tol;
  return r;
}

ComplexMatrix apply_reconstruction(
    const ReconstructedMap& recon, const RealVector& coeffs) {
  if (coeffs.size() != static_cast<Eigen::Index>(recon.f_primes.size())) {
    throw DimensionError("apply_reconstruction: coefficient length");
  }
  ComplexMatrix out = recon.one_prime;
  for (Eigen::Index a = 0; a < coeffs.size(); ++a) {
    out += coeffs(a) * recon.f_primes[static_cast<std::size_t>(a)];
  }
  return out / static_cast<double>(recon.n);
}

}  // namespace affmap
