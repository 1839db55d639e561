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

#include "affmap/domains.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <regex>

#include "affmap/parallel.hpp"
#include "affmap/random.hpp"

namespace affmap {

namespace {

using Solver = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>;

// The certificate is cheap but not free; after the first iterations it is
// only checked every few steps.
constexpr int kCertificateWarmup = 50;
constexpr int kCertificateStride = 8;

Solver solve(const ComplexMatrix& h, int options = Eigen::ComputeEigenvectors) {
  Solver solver(Eigen::MatrixXcd(0.5 * (h + h.adjoint())), options);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver did not converge");
  }
  return solver;
}

bool compatible_full(const JointStateCoeffs& c, const ProductBasis& pb,
                     double tol) {
  return is_psd(reconstruct_state(c, pb), tol);
}

PartialResult compatible_partial(
    const JointStateCoeffs& c, const ProductBasis& pb, double tol,
    int max_iter) {
  const double dim = pb.dim();
  RealMatrix coeff = c.coeff;
  ComplexMatrix x_affine = matrix_from_coefficients(coeff, pb);
  PartialResult out;
  for (int it = 0; it <= max_iter; ++it) {
    out.iterations = it;
    const Solver eig = solve(x_affine);
    const RealVector& lambda = eig.eigenvalues();
    if (lambda(0) >= -tol) {
      out.status = Feasibility::kFeasible;
      out.witness = x_affine;
      return out;
    }
    // Cone projection onto {X ⪰ tol·I}; the gap Z = X_P - X_A is PSD.
    RealVector gap(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      gap(i) = std::max(tol - lambda(i), 0.0);
    }
    const Eigen::MatrixXcd& v = eig.eigenvectors();
    const ComplexMatrix z = v * gap.cast<Complex>().asDiagonal() * v.adjoint();
    out.distance = gap.norm();
    const ComplexMatrix x_cone = x_affine + z;

    if (it < kCertificateWarmup || it % kCertificateStride == 0) {
      RealMatrix zc = coefficients_of(z, pb);
      for (Eigen::Index a = 0; a < zc.rows(); ++a) {
        for (Eigen::Index b = 0; b < zc.cols(); ++b) {
          if (c.free_mask(a, b)) zc(a, b) = 0.0;
        }
      }
      const ComplexMatrix z_fixed = matrix_from_coefficients(zc, pb);
      const double z_min = solve(z_fixed, Eigen::EigenvaluesOnly).eigenvalues()(0);
      const double shift = std::max(0.0, -z_min);
      // Tr[X] = 1 on the affine set, so the shift adds exactly `shift`.
      const double value = trace_product(z_fixed, x_affine).real() + shift;
      const double weight = z_fixed.trace().real() + shift * dim;
      if (weight > 0 && value < -tol * weight) {
        out.status = Feasibility::kInfeasible;
        out.witness = x_affine;
        return out;
      }
    }

    RealMatrix next = coefficients_of(x_cone, pb);
    for (Eigen::Index a = 0; a < next.rows(); ++a) {
      for (Eigen::Index b = 0; b < next.cols(); ++b) {
        if (!c.free_mask(a, b)) next(a, b) = c.coeff(a, b);
      }
    }
    x_affine = matrix_from_coefficients(next, pb);
  }
  out.status = Feasibility::kUnknown;
  out.witness = x_affine;
  return out;
}

double probe_radius(int n) { return std::sqrt(static_cast<double>(n - 1)); }

}  // namespace

JointStateCoeffs apply_probe(
    const JointStateCoeffs& spec, const RealVector& probe) {
  spec.validate();
  if (probe.size() != spec.n * spec.n - 1) {
    throw DimensionError(
        "probe must have N²-1 = " + std::to_string(spec.n * spec.n - 1) +
        " components");
  }
  JointStateCoeffs out = spec;
  for (Eigen::Index alpha = 1; alpha <= probe.size(); ++alpha) {
    out.coeff(alpha, 0) = probe(alpha - 1);
    out.free_mask(alpha, 0) = false;
  }
  return out;
}

bool is_compatible_full(const DomainQuery& q, double tol) {
  const JointStateCoeffs c = apply_probe(q.spec, q.probe);
  if (!c.fully_fixed()) {
    throw ValidationError(
        "is_compatible_full: spec has free entries; use the partial solver");
  }
  return compatible_full(c, ProductBasis(c.n, c.m), tol);
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible:
      return "feasible";
    case Feasibility::kInfeasible:
      return "infeasible";
    case Feasibility::kUnknown:
      return "unknown";
  }
  return "unknown";
}

PartialResult is_compatible_partial(
    const DomainQuery& q, double tol, int max_iter) {
  const JointStateCoeffs c = apply_probe(q.spec, q.probe);
  return compatible_partial(c, ProductBasis(c.n, c.m), tol, max_iter);
}

bool is_in_positivity_domain(
    const AffineMap& map, const RealVector& probe, double tol) {
  const ComplexMatrix rho = state_from_bloch(probe, map.basis_s());
  if (!is_psd(rho, tol)) {
    throw ValidationError("positivity domain: probe is not a valid state");
  }
  return is_psd(apply_affine(map, rho, tol), tol);
}

Section Section::parse(const std::string& name) {
  static const std::regex pattern(R"(p(\d+)p(\d+))");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) {
    throw ValidationError("invalid section '" + name + "', expected e.g. p1p2");
  }
  const int u = std::stoi(match[1]) - 1;
  const int v = std::stoi(match[2]) - 1;
  if (u < 0 || v < 0 || u == v) {
    throw ValidationError("invalid section '" + name + "'");
  }
  return {u, v};
}

std::string Section::name() const {
  return "p" + std::to_string(u + 1) + "p" + std::to_string(v + 1);
}

std::vector<RealVector> sample_probes(int n, const SampleOptions& o) {
  const int dim = n * n - 1;
  const double radius = probe_radius(n);
  std::vector<RealVector> probes;
  if (o.section) {
    if (o.section->u >= dim || o.section->v >= dim) {
      throw ValidationError("section axis out of range for this dimension");
    }
  }
  if (o.region == SampleRegion::kRandom) {
    if (o.count <= 0) throw ValidationError("sample count must be positive");
    probes.resize(static_cast<std::size_t>(o.count));
    for (int i = 0; i < o.count; ++i) {
      Rng rng = make_rng(o.seed, static_cast<std::uint64_t>(i));
      RealVector p = RealVector::Zero(dim);
      if (o.section) {
        const RealVector d = random_in_ball(rng, 2);
        p(o.section->u) = radius * d(0);
        p(o.section->v) = radius * d(1);
      } else {
        p = radius * random_in_ball(rng, dim);
      }
      probes[static_cast<std::size_t>(i)] = std::move(p);
    }
    return probes;
  }
  if (o.resolution < 2) throw ValidationError("resolution must be >= 2");
  if (o.section) {
    const int r = o.resolution;
    for (int i = 0; i < r; ++i) {
      const double x = -radius + 2.0 * radius * i / (r - 1);
      for (int j = 0; j < r; ++j) {
        const double y = -radius + 2.0 * radius * j / (r - 1);
        if (x * x + y * y > radius * radius * (1.0 + 1e-12)) continue;
        RealVector p = RealVector::Zero(dim);
        p(o.section->u) = x;
        p(o.section->v) = y;
        probes.push_back(std::move(p));
      }
    }
    return probes;
  }
  if (dim != 3) {
    throw ValidationError("volume grids are only defined for qubit subsystems");
  }
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  probes.push_back(RealVector::Zero(3));
  for (int shell = 1; shell <= o.resolution; ++shell) {
    const double r = radius * shell / o.resolution;
    const int count = std::max(
        1, static_cast<int>(std::lround(4.0 * std::numbers::pi * shell * shell)));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden_angle * i;
      RealVector p(3);
      p << r * rxy * std::cos(phi), r * rxy * std::sin(phi), r * z;
      probes.push_back(std::move(p));
    }
  }
  return probes;
}

DomainSample sample_domain(
    const JointStateCoeffs& spec, const AffineMap* map,
    const SampleOptions& options) {
  spec.validate();
  if (map && (map->n() != spec.n)) {
    throw DimensionError("sample_domain: map and spec dimensions differ");
  }
  const std::vector<RealVector> probes = sample_probes(spec.n, options);
  if (probes.empty()) throw ValidationError("sample_domain: no probe points");
  const ProductBasis pb(spec.n, spec.m);
  const HermitianBasis& basis_s = pb.basis_s();

  DomainSample out;
  out.options = options;
  out.partial = !apply_probe(spec, probes.front()).fully_fixed();
  out.points.resize(probes.size());
  parallel_for(probes.size(), [&](std::size_t i) {
    DomainPoint& pt = out.points[i];
    pt.probe = probes[i];
    const JointStateCoeffs c = apply_probe(spec, pt.probe);
    if (out.partial) {
      const PartialResult r =
          compatible_partial(c, pb, options.tol, options.max_iter);
      pt.compat = r.status == Feasibility::kFeasible     ? kCompatIn
                  : r.status == Feasibility::kInfeasible ? kCompatOut
                                                         : kCompatUnknown;
    } else {
      pt.compat = compatible_full(c, pb, options.tol) ? kCompatIn : kCompatOut;
    }
    const ComplexMatrix rho = state_from_bloch(pt.probe, basis_s);
    if (!is_psd(rho, options.tol)) {
      pt.pos = 0;
    } else if (map) {
      pt.pos = is_psd(apply_affine(*map, rho, options.tol), options.tol) ? 1 : 0;
    } else {
      pt.pos = 1;
    }
  });
  return out;
}

std::vector<ImagePoint> image_of_ball(
    const AffineMap& map, const Section& section, int resolution) {
  if (map.n() != 2) throw DimensionError("image_of_ball: qubit map required");
  if (section.u > 2 || section.v > 2) {
    throw ValidationError("image_of_ball: section axis out of range");
  }
  if (resolution < 3) throw ValidationError("image_of_ball: resolution >= 3");
  std::vector<ImagePoint> out;
  out.reserve(static_cast<std::size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / resolution;
    RealVector a = RealVector::Zero(3);
    a(section.u) = std::cos(theta);
    a(section.v) = std::sin(theta);
    const ComplexMatrix image =
        linear_extension(map, state_from_bloch(a, map.basis_s()));
    out.push_back({a, bloch_of(image, map.basis_s())});
  }
  return out;
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

void write_domain_csv(std::ostream& out, const DomainSample& sample) {
  const Eigen::Index dim =
      sample.points.empty() ? 3 : sample.points.front().probe.size();
  for (Eigen::Index i = 0; i < dim; ++i) out << 'a' << (i + 1) << ',';
  out << "compat,pos\n";
  for (const auto& pt : sample.points) {
    for (Eigen::Index i = 0; i < pt.probe.size(); ++i) {
      out << format_real(pt.probe(i)) << ',';
    }
    out << pt.compat << ',' << pt.pos << '\n';
  }
}

void write_image_csv(std::ostream& out, const std::vector<ImagePoint>& points) {
  out << "in1,in2,in3,out1,out2,out3\n";
  for (const auto& p : points) {
    for (Eigen::Index i = 0; i < 3; ++i) out << format_real(p.input(i)) << ',';
    for (Eigen::Index i = 0; i < 3; ++i) {
      out << format_real(p.output(i)) << (i < 2 ? ',' : '\n');
    }
  }
}

}  // namespace affmap
