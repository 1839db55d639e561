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

#include "affmap/io.hpp"

#include <fstream>
#include <sstream>

#include "affmap/errors.hpp"

namespace affmap::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("json: missing key \"") + key + "\"");
  }
  return j.at(key);
}

double real_from_json(const Json& j) {
  if (!j.is_number()) throw ValidationError("json: expected a number");
  return j.get<double>();
}

void require_rectangular(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw ValidationError("json: expected a nested matrix array");
  }
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.front().size()) {
      throw ValidationError("json: matrix rows have unequal length");
    }
  }
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RealMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const JointStateCoeffs& c) {
  Json mask = Json::array();
  for (Eigen::Index r = 0; r < c.free_mask.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < c.free_mask.cols(); ++k) {
      row.push_back(static_cast<bool>(c.free_mask(r, k)));
    }
    mask.push_back(std::move(row));
  }
  return {{"n", c.n}, {"m", c.m}, {"coeff", to_json(c.coeff)},
          {"free_mask", std::move(mask)}};
}

Json to_json(const qubit2::Rotation& r) {
  return {{"axis", Json::array({r.axis(0), r.axis(1), r.axis(2)})},
          {"angle", r.angle}};
}

Json to_json(const std::vector<ProbePair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) {
    out.push_back({{"rho_in_coeffs", to_json(p.rho_in_coeffs)},
                   {"rho_out", to_json(p.rho_out)}});
  }
  return out;
}

Json map_to_json(const AffineMap& map) {
  Json g = Json::array();
  for (const auto& op : map.g_ops()) g.push_back(to_json(op));
  Json f = Json::array();
  for (const auto& fp : map.f_primes()) f.push_back(to_json(fp));
  return {{"n", map.n()},
          {"m", map.m()},
          {"g_ops", std::move(g)},
          {"k", to_json(map.k())},
          {"one_prime", to_json(map.one_prime())},
          {"f_primes", std::move(f)},
          {"b_matrix", to_json(b_matrix(map).b)}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {real_from_json(j[0]), real_from_json(j[1])};
  }
  throw ValidationError("json: expected a number or a [re, im] pair");
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
  require_rectangular(j);
  ComplexMatrix m(static_cast<Eigen::Index>(j.size()),
                  static_cast<Eigen::Index>(j.front().size()));
  for (std::size_t r = 0; r < j.size(); ++r) {
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_from_json(j[r][c]);
    }
  }
  return m;
}

RealMatrix real_matrix_from_json(const Json& j) {
  require_rectangular(j);
  RealMatrix m(static_cast<Eigen::Index>(j.size()),
               static_cast<Eigen::Index>(j.front().size()));
  for (std::size_t r = 0; r < j.size(); ++r) {
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          real_from_json(j[r][c]);
    }
  }
  return m;
}

RealVector real_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("json: expected a number array");
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = real_from_json(j[i]);
  }
  return v;
}

JointStateCoeffs spec_from_json(const Json& j) {
  JointStateCoeffs c;
  c.n = require(j, "n").get<int>();
  c.m = require(j, "m").get<int>();
  c.coeff = real_matrix_from_json(require(j, "coeff"));
  c.free_mask = BoolMatrix::Constant(c.coeff.rows(), c.coeff.cols(), false);
  if (j.contains("free_mask")) {
    const Json& mask = j.at("free_mask");
    require_rectangular(mask);
    if (static_cast<Eigen::Index>(mask.size()) != c.coeff.rows() ||
        static_cast<Eigen::Index>(mask.front().size()) != c.coeff.cols()) {
      throw DimensionError("json: free_mask shape differs from coeff");
    }
    for (std::size_t r = 0; r < mask.size(); ++r) {
      for (std::size_t k = 0; k < mask[r].size(); ++k) {
        if (!mask[r][k].is_boolean()) {
          throw ValidationError("json: free_mask entries must be booleans");
        }
        c.free_mask(static_cast<Eigen::Index>(r),
                    static_cast<Eigen::Index>(k)) = mask[r][k].get<bool>();
      }
    }
  }
  c.validate();
  return c;
}

AffineMap map_from_json(const Json& j) {
  const Json& g = require(j, "g_ops");
  if (!g.is_array() || g.empty()) {
    throw ValidationError("json: g_ops must be a non-empty array");
  }
  std::vector<ComplexMatrix> ops;
  for (const auto& op : g) ops.push_back(complex_matrix_from_json(op));
  AffineMap map(std::move(ops), complex_matrix_from_json(require(j, "k")));
  if (j.contains("n") && j.at("n").get<int>() != map.n()) {
    throw DimensionError("json: n disagrees with g_ops");
  }
  return map;
}

qubit2::Rotation rotation_from_json(const Json& j) {
  const RealVector axis = real_vector_from_json(require(j, "axis"));
  if (axis.size() != 3) throw DimensionError("json: rotation axis needs 3 components");
  return {qubit2::Vec3(axis(0), axis(1), axis(2)),
          real_from_json(require(j, "angle"))};
}

std::vector<ProbePair> pairs_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("json: pairs must be an array");
  std::vector<ProbePair> out;
  for (const auto& p : j) {
    out.push_back({real_vector_from_json(require(p, "rho_in_coeffs")),
                   complex_matrix_from_json(require(p, "rho_out"))});
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace affmap::io
