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
#include <sstream>

#include "affmap/domains.hpp"
#include "affmap/presets.hpp"
#include "affmap/qubit2.hpp"
#include "affmap/random.hpp"
#include "support.hpp"

using namespace affmap;
using Catch::Matchers::WithinAbs;

namespace {

/// Joint state for the fig1 preset correlations with probe a and diagonal d.
ComplexMatrix fig1_state(const RealVector& a, const Eigen::Vector3d& d) {
  Eigen::Matrix4d c = Eigen::Matrix4d::Constant(0.25);
  c(0, 0) = 1.0;
  for (int j = 1; j <= 3; ++j) {
    c(j, 0) = a(j - 1);
    c(j, j) = d(j - 1);
  }
  return oracle::two_qubit_state(c);
}

/// max over the free diagonal of λ_min, by pattern search. λ_min of an
/// affine matrix family is concave, so the search finds the global maximum.
double best_min_eig(const RealVector& a) {
  Eigen::Vector3d d = Eigen::Vector3d::Zero();
  double best = oracle::min_eig(fig1_state(a, d));
  for (double step = 0.5; step > 1e-7; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int j = 0; j < 3; ++j) {
        for (const double s : {step, -step}) {
          Eigen::Vector3d t = d;
          t(j) += s;
          const double v = oracle::min_eig(fig1_state(a, t));
          if (v > best + 1e-15) {
            best = v;
            d = t;
            improved = true;
          }
        }
      }
    }
  }
  return best;
}

bool fig2_spheres(const RealVector& a) {
  const double x = 1.0 / std::sqrt(3.0);
  const double r2 = a(0) * a(0) + a(1) * a(1);
  return r2 + (a(2) + x) * (a(2) + x) <= (1 + x) * (1 + x) &&
         r2 + (a(2) - x) * (a(2) - x) <= (1 - x) * (1 - x);
}

}  // namespace

TEST_CASE("apply_probe overwrites and fixes the marginal", "[domains]") {
  JointStateCoeffs spec = presets::fig1_spec(true);
  spec.free_mask(1, 0) = true;
  const JointStateCoeffs c = apply_probe(spec, RealVector::Constant(3, 0.2));
  for (int a = 1; a <= 3; ++a) {
    CHECK(c.coeff(a, 0) == 0.2);
    CHECK_FALSE(c.free_mask(a, 0));
  }
  CHECK(c.free_count() == 3);
  CHECK_THROWS_AS(apply_probe(spec, RealVector::Zero(2)), DimensionError);
}

TEST_CASE("full compatibility matches the two-sphere description", "[domains]") {
  const JointStateCoeffs spec = presets::fig2_spec();
  Rng rng = make_rng(41);
  int disagreements = 0;
  int inside = 0;
  for (int i = 0; i < 2000; ++i) {
    const RealVector a = random_in_ball(rng, 3);
    const bool got = is_compatible_full({spec, a});
    disagreements += got != fig2_spheres(a);
    inside += got;
  }
  CHECK(disagreements == 0);
  CHECK(inside > 0);
  CHECK_FALSE(is_compatible_full({spec, RealVector::Zero(3)}));
  RealVector center(3);
  center << 0.0, 0.0, 1.0 / std::sqrt(3.0);
  CHECK(is_compatible_full({spec, center}));
  CHECK_THROWS_AS(is_compatible_full({presets::fig1_spec(true), center}),
                  ValidationError);
}

TEST_CASE("partial compatibility agrees with a concave-maximization oracle",
          "[domains][partial]") {
  const JointStateCoeffs spec = presets::fig1_spec(true);
  Rng rng = make_rng(42);
  int feasible = 0, infeasible = 0;
  for (int i = 0; i < 150; ++i) {
    const RealVector a = random_in_ball(rng, 3);
    const PartialResult r = is_compatible_partial({spec, a});
    const double best = best_min_eig(a);
    if (r.status == Feasibility::kFeasible) {
      ++feasible;
      CHECK(best >= -1e-8);
      CHECK(oracle::min_eig(r.witness) >= -1e-9);
      // The witness keeps every fixed coefficient.
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          if (j == k && j > 0) continue;
          const double expect = j == 0 && k == 0 ? 1.0
                                : k == 0         ? a(j - 1)
                                : j == 0         ? 0.25
                                                 : 0.25;
          CHECK_THAT(oracle::mean(r.witness, j, k), WithinAbs(expect, 1e-9));
        }
    } else if (r.status == Feasibility::kInfeasible) {
      ++infeasible;
      CHECK(best < 1e-9);
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("partial solver on a fully fixed spec matches the full check",
          "[domains][partial]") {
  const JointStateCoeffs spec = presets::fig2_spec();
  Rng rng = make_rng(43);
  for (int i = 0; i < 200; ++i) {
    const RealVector a = random_in_ball(rng, 3);
    const PartialResult r = is_compatible_partial({spec, a});
    CHECK(r.status != Feasibility::kUnknown);
    CHECK((r.status == Feasibility::kFeasible) == is_compatible_full({spec, a}));
  }
}

TEST_CASE("compatibility domains are convex", "[domains]") {
  const JointStateCoeffs spec = presets::fig2_spec();
  Rng rng = make_rng(44);
  std::vector<RealVector> in;
  while (in.size() < 40) {
    const RealVector a = random_in_ball(rng, 3);
    if (is_compatible_full({spec, a})) in.push_back(a);
  }
  for (std::size_t i = 0; i + 1 < in.size(); ++i) {
    for (double t : {0.1, 0.35, 0.5, 0.8}) {
      const RealVector mix = t * in[i] + (1 - t) * in[i + 1];
      CHECK(is_compatible_full({spec, mix}));
    }
  }
}

TEST_CASE("positivity domain of the identity channel", "[domains]") {
  // int-ham with γ = 0 is the identity: its positivity domain is the ball.
  const AffineMap id = qubit2::int_ham_map({{0.0, 0.0, 0.0}}, JointStateCoeffs::zeros(2, 2));
  CHECK(is_in_positivity_domain(id, RealVector::Unit(3, 0)));
  RealVector outside(3);
  outside << 0.8, 0.7, 0.0;
  CHECK_THROWS_AS(is_in_positivity_domain(id, outside), ValidationError);
}

TEST_CASE("section parsing", "[domains]") {
  CHECK(Section::parse("p1p2").u == 0);
  CHECK(Section::parse("p2p3").v == 2);
  CHECK(Section::parse("p1p3").name() == "p1p3");
  CHECK_THROWS_AS(Section::parse("p1p1"), ValidationError);
  CHECK_THROWS_AS(Section::parse("xy"), ValidationError);
  SampleOptions o;
  o.section = Section::parse("p1p4");
  CHECK_THROWS_AS(sample_probes(2, o), ValidationError);
}

TEST_CASE("probe grids", "[domains]") {
  SampleOptions o;
  o.section = Section::parse("p1p2");
  o.resolution = 5;
  const auto grid = sample_probes(2, o);
  // Points of the 5×5 grid on [-1, 1]² inside the unit disk.
  CHECK(grid.size() == 13);
  for (const auto& p : grid) {
    CHECK(p(2) == 0.0);
    CHECK(p.norm() <= 1.0 + 1e-12);
  }
  o.section.reset();
  o.resolution = 3;
  const auto shells = sample_probes(2, o);
  CHECK(shells.front().norm() == 0.0);
  for (const auto& p : shells) CHECK(p.norm() <= 1.0 + 1e-12);
  o.region = SampleRegion::kRandom;
  o.count = 50;
  o.seed = 3;
  const auto r1 = sample_probes(2, o);
  const auto r2 = sample_probes(2, o);
  REQUIRE(r1.size() == 50);
  for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1[i] == r2[i]);
}

TEST_CASE("domain samples and CSV output", "[domains]") {
  SampleOptions o;
  o.section = Section::parse("p1p3");
  o.resolution = 21;
  const JointStateCoeffs spec = presets::fig2_spec();
  const DomainSample s = sample_domain(spec, nullptr, o);
  CHECK_FALSE(s.partial);
  for (const auto& p : s.points) {
    CHECK(p.compat == (fig2_spheres(p.probe) ? kCompatIn : kCompatOut));
    CHECK(p.pos == 1);
  }
  std::ostringstream csv;
  write_domain_csv(csv, s);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "a1,a2,a3,compat,pos");
  std::string row;
  std::size_t rows = 0;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == s.points.size());
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1.0 / 3.0) == "0.333333333");

  std::ostringstream again;
  write_domain_csv(again, sample_domain(spec, nullptr, o));
  CHECK(again.str() == csv.str());
}

TEST_CASE("image of the unit circle", "[domains]") {
  const qubit2::IntHamParams p{{0.4, 0.9, 1.3}};
  const AffineMap map = qubit2::int_ham_map(p, presets::fig1_spec(true));
  const auto pts = image_of_ball(map, Section::parse("p1p2"), 12);
  REQUIRE(pts.size() == 12);
  for (const auto& pt : pts) {
    CHECK_THAT(pt.input.norm(), WithinAbs(1.0, 1e-12));
    const qubit2::Vec3 a(pt.input(0), pt.input(1), pt.input(2));
    CHECK((pt.output - RealVector(qubit2::bloch_image(map, a))).norm() < 1e-12);
  }
  std::ostringstream csv;
  write_image_csv(csv, pts);
  CHECK(csv.str().rfind("in1,in2,in3,out1,out2,out3\n", 0) == 0);
}
