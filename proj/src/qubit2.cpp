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

#include "affmap/qubit2.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "affmap/parallel.hpp"
#include "affmap/random.hpp"

namespace affmap::qubit2 {

namespace {

using namespace std::complex_literals;

double corr_at(const JointStateCoeffs& c, int j, int k) {
  return c.coeff(j, k);
}

void require_qubit_pair(const JointStateCoeffs& c, const char* what) {
  if (c.n != 2 || c.m != 2 || c.coeff.rows() != 4 || c.coeff.cols() != 4) {
    throw DimensionError(std::string(what) + ": two-qubit coefficients needed");
  }
}

Vec3 spherical_axis(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

/// Euclidean projection of a Hermitian matrix onto unit-trace PSD matrices.
ComplexMatrix project_to_density(const ComplexMatrix& h) {
  const HermitianEigen eig = herm_eig(h, 1e-6);
  const Eigen::Index d = eig.values.size();
  std::vector<double> sorted(eig.values.data(), eig.values.data() + d);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    cumulative += sorted[static_cast<std::size_t>(i)];
    const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[static_cast<std::size_t>(i)] - candidate > 0) shift = candidate;
  }
  RealVector clipped(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    clipped(i) = std::max(eig.values(i) - shift, 0.0);
  }
  ComplexMatrix out =
      eig.vectors * clipped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

/// Hermitian W_j with κ_j = Tr[W_j Π] for the fixed unitary u.
std::array<ComplexMatrix, 3> kappa_functionals(const ComplexMatrix& u) {
  std::array<ComplexMatrix, 3> w;
  const ComplexMatrix half_id = identity(2) / 2.0;
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix x = u.adjoint() * kron(pauli(j + 1), identity(2)) * u;
    w[j] = x - kron(partial_trace(x, 2, 2, TraceSide::kRight), half_id);
    w[j] = 0.5 * (w[j] + w[j].adjoint());
  }
  return w;
}

Vec3 kappa_linear(const std::array<ComplexMatrix, 3>& w, const ComplexMatrix& pi) {
  return {trace_product(w[0], pi).real(), trace_product(w[1], pi).real(),
          trace_product(w[2], pi).real()};
}

struct StateOpt {
  double value = 0.0;
  ComplexMatrix state;
};

/// Projected gradient ascent of |κ| over density matrices for a fixed U.
StateOpt maximize_over_states(
    const ComplexMatrix& u, const ComplexMatrix& start, int steps) {
  const auto w = kappa_functionals(u);
  StateOpt best{kappa_linear(w, start).norm(), start};
  ComplexMatrix pi = start;
  for (int step = 0; step < steps; ++step) {
    Vec3 kappa = kappa_linear(w, pi);
    const double norm = kappa.norm();
    const Vec3 dir = norm > 1e-14 ? Vec3(kappa / norm) : Vec3::UnitX();
    const ComplexMatrix grad = dir(0) * w[0] + dir(1) * w[1] + dir(2) * w[2];
    pi = project_to_density(pi + grad);
    const double value = kappa_linear(w, pi).norm();
    if (value > best.value) best = {value, pi};
  }
  return best;
}

ComplexMatrix family_unitary(KappaFamily family, const std::vector<double>& p) {
  switch (family) {
    case KappaFamily::kIntHam:
      return int_ham_unitary({{p[0], p[1], p[2]}});
    case KappaFamily::kLorentz: {
      LorentzParams lp;
      lp.r1 = {spherical_axis(p[0], p[1]), p[2]};
      lp.r2 = {spherical_axis(p[3], p[4]), p[5]};
      return lorentz_unitary(lp);
    }
    case KappaFamily::kRandomUnitary: {
      const ProductBasis& pb = qubit_basis();
      ComplexMatrix h = ComplexMatrix::Zero(4, 4);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) h += p[a * 4 + b] * pb.element(a, b);
      }
      return unitary_from_hermitian(h, 1.0);
    }
  }
  throw ValidationError("unknown kappa family");
}

std::vector<double> sample_params(KappaFamily family, Rng& rng) {
  constexpr double pi = std::numbers::pi;
  switch (family) {
    case KappaFamily::kIntHam:
      return {uniform(rng, -pi, pi), uniform(rng, -pi, pi),
              uniform(rng, -pi, pi)};
    case KappaFamily::kLorentz: {
      std::vector<double> p(6);
      for (int r = 0; r < 2; ++r) {
        p[r * 3 + 0] = std::acos(uniform(rng, -1.0, 1.0));
        p[r * 3 + 1] = uniform(rng, 0.0, 2.0 * pi);
        p[r * 3 + 2] = uniform(rng, 0.0, 2.0 * pi);
      }
      return p;
    }
    case KappaFamily::kRandomUnitary: {
      std::normal_distribution<double> normal(0.0, 1.0);
      std::vector<double> p(16);
      for (auto& x : p) x = normal(rng);
      return p;
    }
  }
  throw ValidationError("unknown kappa family");
}

/// Maximizes f on [lo, hi] by golden-section search; returns the argmax.
double golden_section_max(
    const std::function<double(double)>& f, double lo, double hi, int iters) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc > fd ? c : d;
}

struct Candidate {
  std::vector<double> params;
  StateOpt state;
};

void refine(KappaFamily family, Candidate& cand, const KappaSearchOptions& o) {
  double span = 0.5;
  for (int sweep = 0; sweep < o.refine_sweeps; ++sweep, span *= 0.5) {
    for (std::size_t i = 0; i < cand.params.size(); ++i) {
      auto objective = [&](double x) {
        std::vector<double> trial = cand.params;
        trial[i] = x;
        return maximize_over_states(
                   family_unitary(family, trial), cand.state.state,
                   o.state_steps)
            .value;
      };
      const double x0 = cand.params[i];
      const double x =
          golden_section_max(objective, x0 - span, x0 + span, o.golden_iters);
      std::vector<double> trial = cand.params;
      trial[i] = x;
      StateOpt next = maximize_over_states(
          family_unitary(family, trial), cand.state.state, o.state_steps);
      if (next.value > cand.state.value) {
        cand.params = std::move(trial);
        cand.state = std::move(next);
      }
    }
  }
}

}  // namespace

const ProductBasis& qubit_basis() {
  static const ProductBasis basis(2, 2);
  return basis;
}

ComplexMatrix int_ham_unitary(const IntHamParams& p) {
  ComplexMatrix u = identity(4);
  for (int j = 0; j < 3; ++j) {
    const double half = p.gamma[j] / 2.0;
    const ComplexMatrix gen = kron(pauli(j + 1), pauli(j + 1));
    u = u * (std::cos(half) * identity(4) - 1i * std::sin(half) * gen);
  }
  return u;
}

std::vector<ComplexMatrix> int_ham_g_ops(const IntHamParams& p) {
  std::array<double, 3> c{};
  std::array<double, 3> s{};
  for (int j = 0; j < 3; ++j) {
    c[j] = std::cos(p.gamma[j] / 2.0);
    s[j] = std::sin(p.gamma[j] / 2.0);
  }
  // Expanding the product of the three commuting factors with
  // (σ_jξ_j)(σ_kξ_k) = -σ_lξ_l for {j,k,l} = {1,2,3}.
  const Complex g0 = c[0] * c[1] * c[2] - 1i * s[0] * s[1] * s[2];
  const std::array<Complex, 3> gj{
      c[0] * s[1] * s[2] - 1i * s[0] * c[1] * c[2],
      s[0] * c[1] * s[2] - 1i * c[0] * s[1] * c[2],
      s[0] * s[1] * c[2] - 1i * c[0] * c[1] * s[2]};
  return {g0 * identity(2), gj[0] * pauli(1), gj[1] * pauli(2),
          gj[2] * pauli(3)};
}

Vec3 int_ham_contraction(const IntHamParams& p) {
  const double c1 = std::cos(p.gamma[0]);
  const double c2 = std::cos(p.gamma[1]);
  const double c3 = std::cos(p.gamma[2]);
  return {c2 * c3, c3 * c1, c1 * c2};
}

Vec3 int_ham_kappa(const IntHamParams& p, const JointStateCoeffs& corr) {
  require_qubit_pair(corr, "int_ham_kappa");
  const double c1 = std::cos(p.gamma[0]);
  const double c2 = std::cos(p.gamma[1]);
  const double c3 = std::cos(p.gamma[2]);
  const double s1 = std::sin(p.gamma[0]);
  const double s2 = std::sin(p.gamma[1]);
  const double s3 = std::sin(p.gamma[2]);
  const auto xi = [&](int k) { return corr_at(corr, 0, k); };
  const auto sx = [&](int j, int k) { return corr_at(corr, j, k); };
  return {xi(1) * s2 * s3 - sx(2, 3) * c2 * s3 + sx(3, 2) * s2 * c3,
          xi(2) * s3 * s1 - sx(3, 1) * c3 * s1 + sx(1, 3) * s3 * c1,
          xi(3) * s1 * s2 - sx(1, 2) * c1 * s2 + sx(2, 1) * s1 * c2};
}

AffineMap int_ham_map(const IntHamParams& p, const JointStateCoeffs& corr) {
  const Vec3 kappa = int_ham_kappa(p, corr);
  ComplexMatrix k = ComplexMatrix::Zero(2, 2);
  for (int j = 0; j < 3; ++j) k += 0.5 * kappa(j) * pauli(j + 1);
  return AffineMap(int_ham_g_ops(p), k);
}

BMatrix int_ham_b_matrix(const IntHamParams& p, const Vec3& kappa) {
  const double c1 = std::cos(p.gamma[0]);
  const double c2 = std::cos(p.gamma[1]);
  const double c3 = std::cos(p.gamma[2]);
  const double k1 = kappa(0);
  const double k2 = kappa(1);
  const double k3 = kappa(2);
  const Complex km = k1 - 1i * k2;
  const Complex kp = k1 + 1i * k2;
  const double sum = c2 * c3 + c3 * c1;
  const double dif = c2 * c3 - c3 * c1;
  BMatrix out{2, ComplexMatrix(4, 4)};
  // clang-format off
  out.b << 1 + k3 + c1 * c2, 0,                 km,                sum,
           0,                1 + k3 - c1 * c2,  dif,               km,
           kp,               dif,               1 - k3 - c1 * c2,  0,
           sum,              kp,                0,                 1 - k3 + c1 * c2;
  // clang-format on
  out.b *= 0.5;
  return out;
}

Mat3 rotation_matrix(const Rotation& r) {
  const double norm = r.axis.norm();
  if (norm == 0.0) {
    if (r.angle != 0.0) {
      throw ValidationError("rotation: zero axis requires a zero angle");
    }
    return Mat3::Identity();
  }
  if (std::abs(norm - 1.0) > 1e-12) {
    throw ValidationError("rotation: axis must be a unit vector");
  }
  Mat3 cross;
  cross << 0, -r.axis(2), r.axis(1), r.axis(2), 0, -r.axis(0), -r.axis(1),
      r.axis(0), 0;
  return std::cos(r.angle) * Mat3::Identity() + std::sin(r.angle) * cross +
         (1.0 - std::cos(r.angle)) * r.axis * r.axis.transpose();
}

ComplexMatrix su2_from_rotation(const Vec3& axis, double angle) {
  const double norm = axis.norm();
  if (norm == 0.0 && angle == 0.0) return identity(2);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw ValidationError("su2_from_rotation: axis must be a unit vector");
  }
  ComplexMatrix n_sigma = ComplexMatrix::Zero(2, 2);
  for (int j = 0; j < 3; ++j) n_sigma += axis(j) * pauli(j + 1);
  return std::cos(angle / 2.0) * identity(2) -
         1i * std::sin(angle / 2.0) * n_sigma;
}

ComplexMatrix lorentz_unitary(const LorentzParams& p) {
  const ComplexMatrix d1 = su2_from_rotation(p.r1.axis, p.r1.angle);
  const ComplexMatrix d2 = su2_from_rotation(p.r2.axis, p.r2.angle);
  const ComplexMatrix plus = (identity(2) + pauli(1)) / 2.0;
  const ComplexMatrix minus = (identity(2) - pauli(1)) / 2.0;
  return kron(d1, plus) + kron(d2, minus);
}

Vec3 lorentz_kappa(const LorentzParams& p, const JointStateCoeffs& corr) {
  require_qubit_pair(corr, "lorentz_kappa");
  const Vec3 c(corr_at(corr, 1, 1), corr_at(corr, 2, 1), corr_at(corr, 3, 1));
  return 0.5 * (rotation_matrix(p.r1) * c - rotation_matrix(p.r2) * c);
}

AffineMap lorentz_map(const LorentzParams& p, const JointStateCoeffs& corr) {
  const Vec3 kappa = lorentz_kappa(p, corr);
  const ComplexMatrix d1 = su2_from_rotation(p.r1.axis, p.r1.angle);
  const ComplexMatrix d2 = su2_from_rotation(p.r2.axis, p.r2.angle);
  ComplexMatrix k = ComplexMatrix::Zero(2, 2);
  for (int j = 0; j < 3; ++j) k += 0.5 * kappa(j) * pauli(j + 1);
  const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  return AffineMap({(d1 + d2) / 2.0, (d1 - d2) / 2.0, zero, zero}, k);
}

Vec3 kappa_of(const AffineMap& map) {
  if (map.n() != 2) throw DimensionError("kappa_of: qubit map required");
  return {trace_product(pauli(1), map.k()).real(),
          trace_product(pauli(2), map.k()).real(),
          trace_product(pauli(3), map.k()).real()};
}

Vec3 bloch_image(const AffineMap& map, const Vec3& a) {
  if (map.n() != 2) throw DimensionError("bloch_image: qubit map required");
  ComplexMatrix rho = identity(2);
  for (int j = 0; j < 3; ++j) rho += a(j) * pauli(j + 1);
  const ComplexMatrix out = linear_extension(map, rho / 2.0);
  return {trace_product(pauli(1), out).real(),
          trace_product(pauli(2), out).real(),
          trace_product(pauli(3), out).real()};
}

KappaBounds kappa_bounds_check(
    const ComplexMatrix& u, const JointStateCoeffs& coeffs, double tol) {
  require_qubit_pair(coeffs, "kappa_bounds_check");
  const ProductBasis& pb = qubit_basis();
  const ComplexMatrix pi = reconstruct_state(coeffs, pb);
  require_density_matrix(pi, tol, "kappa_bounds_check");
  const ComplexMatrix k = extract_K(u, pi, pb, tol);
  Vec3 kappa;
  for (int j = 0; j < 3; ++j) kappa(j) = trace_product(pauli(j + 1), k).real();
  const double a2 = marginal_coeffs(coeffs).squaredNorm();
  KappaBounds out;
  out.kappa_norm = kappa.norm();
  out.bound_a = std::sqrt(std::max(0.0, 3.0 - a2));
  out.bound_b = 1.0 + std::sqrt(a2);
  out.ok = out.kappa_norm <= std::min(out.bound_a, out.bound_b) + tol;
  return out;
}

std::string to_string(KappaFamily family) {
  switch (family) {
    case KappaFamily::kIntHam:
      return "int_ham";
    case KappaFamily::kLorentz:
      return "lorentz";
    case KappaFamily::kRandomUnitary:
      return "random_unitary";
  }
  return "unknown";
}

KappaFamily parse_family(const std::string& name) {
  if (name == "int_ham" || name == "int-ham") return KappaFamily::kIntHam;
  if (name == "lorentz") return KappaFamily::kLorentz;
  if (name == "random_unitary" || name == "random-unitary" ||
      name == "random") {
    return KappaFamily::kRandomUnitary;
  }
  throw ValidationError("unknown kappa family '" + name + "'");
}

KappaSearchResult kappa_search(
    KappaFamily family, int trials, std::uint64_t seed,
    const KappaSearchOptions& options) {
  if (trials < 1) throw ValidationError("kappa_search: trials must be >= 1");
  std::vector<Candidate> cands(static_cast<std::size_t>(trials));
  parallel_for(cands.size(), [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    Candidate c;
    c.params = sample_params(family, rng);
    const ComplexMatrix start = random_density_matrix(rng, 4);
    c.state = maximize_over_states(
        family_unitary(family, c.params), start, options.state_steps);
    cands[i] = std::move(c);
  });

  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return cands[a].state.value > cands[b].state.value;
  });
  const std::size_t top =
      std::min<std::size_t>(order.size(), std::max(0, options.refine_top));
  parallel_for(top, [&](std::size_t r) {
    refine(family, cands[order[r]], options);
  });

  KappaSearchResult result;
  result.trials = trials;
  std::vector<KappaBounds> checks(cands.size());
  parallel_for(cands.size(), [&](std::size_t i) {
    const ComplexMatrix u = family_unitary(family, cands[i].params);
    checks[i] = kappa_bounds_check(
        u, expand_state(cands[i].state.state, qubit_basis(), 1e-8),
        options.tol);
  });
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!checks[i].ok) ++result.bound_violations;
    const double bound = std::min(checks[i].bound_a, checks[i].bound_b);
    if (bound > 0) {
      result.max_bound_ratio =
          std::max(result.max_bound_ratio, checks[i].kappa_norm / bound);
    }
    if (checks[i].kappa_norm > result.best_kappa_norm || result.best_trial < 0) {
      result.best_kappa_norm = checks[i].kappa_norm;
      result.best_trial = static_cast<int>(i);
    }
  }
  const Candidate& best = cands[static_cast<std::size_t>(result.best_trial)];
  KappaWitness& w = result.witness;
  w.family = family;
  w.params = best.params;
  w.unitary = family_unitary(family, best.params);
  w.coeffs = expand_state(best.state.state, qubit_basis(), 1e-8);
  const ComplexMatrix k = extract_K(w.unitary, best.state.state, qubit_basis());
  for (int j = 0; j < 3; ++j) w.kappa(j) = trace_product(pauli(j + 1), k).real();
  return result;
}

}  // namespace affmap::qubit2
