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

#include "affmap/presets.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "affmap/errors.hpp"
#include "affmap/io.hpp"

namespace affmap::presets {

namespace {

const char* const kSections[] = {"p1p2", "p1p3", "p2p3"};

struct Job {
  std::string stem;
  std::string reading;  // "partial" or "full"
  JointStateCoeffs spec;
  std::optional<Section> section;
};

io::Json counts_of(const DomainSample& s) {
  int in = 0, out = 0, unknown = 0, pos = 0;
  for (const auto& p : s.points) {
    if (p.compat == kCompatIn) ++in;
    if (p.compat == kCompatOut) ++out;
    if (p.compat == kCompatUnknown) ++unknown;
    pos += p.pos;
  }
  return {{"points", s.points.size()}, {"in", in}, {"out", out},
          {"unknown", unknown}, {"pos", pos}};
}

class Writer {
 public:
  Writer(const PresetOptions& o, PresetResult& r) : options_(o), result_(r) {
    if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  }

  void domain(const Job& job, const DomainSample& sample) {
    if (options_.out_dir.empty()) return;
    const std::string csv = path(job.stem + ".csv");
    std::ofstream out(csv);
    if (!out) throw ValidationError("cannot write " + csv);
    write_domain_csv(out, sample);
    io::Json side = {
        {"preset", result_.name},
        {"csv", job.stem + ".csv"},
        {"reading", job.reading},
        {"region", job.section ? job.section->name() : "volume"},
        {"seed", options_.seed},
        {"resolution",
         job.section ? options_.resolution : options_.shells},
        {"tol", options_.tol},
        {"spec", io::to_json(job.spec)},
        {"map", result_.map ? io::map_to_json(*result_.map) : io::Json()},
        {"counts", counts_of(sample)}};
    sidecar(job.stem, side);
    result_.files.push_back(csv);
  }

  void image(const std::string& stem, const std::vector<ImagePoint>& pts,
             const std::string& source) {
    if (options_.out_dir.empty()) return;
    const std::string csv = path(stem + ".csv");
    std::ofstream out(csv);
    if (!out) throw ValidationError("cannot write " + csv);
    write_image_csv(out, pts);
    sidecar(stem, {{"preset", result_.name},
                   {"csv", stem + ".csv"},
                   {"source", source},
                   {"points", pts.size()},
                   {"map", io::map_to_json(*result_.map)}});
    result_.files.push_back(csv);
  }

 private:
  std::string path(const std::string& file) const {
    return (std::filesystem::path(options_.out_dir) / file).string();
  }

  void sidecar(const std::string& stem, const io::Json& j) {
    const std::string file = path(stem + ".json");
    io::write_json_file(file, j);
    result_.files.push_back(file);
  }

  const PresetOptions& options_;
  PresetResult& result_;
};

void run_jobs(const std::vector<Job>& jobs, const PresetOptions& o,
              PresetResult& result, Writer& writer) {
  for (const auto& job : jobs) {
    SampleOptions so;
    so.region = SampleRegion::kGrid;
    so.section = job.section;
    so.resolution = job.section ? o.resolution : o.shells;
    so.seed = o.seed;
    so.tol = o.tol;
    so.max_iter = o.max_iter;
    DomainSample s =
        sample_domain(job.spec, result.map ? &*result.map : nullptr, so);
    writer.domain(job, s);
    result.samples.emplace(job.stem, std::move(s));
  }
}

std::vector<Job> section_jobs(const std::string& preset,
                              const std::string& reading,
                              const JointStateCoeffs& spec, bool volume,
                              const std::vector<std::string>& sections) {
  std::vector<Job> jobs;
  for (const auto& name : sections) {
    jobs.push_back({preset + "_" + reading + "_" + name, reading, spec,
                    Section::parse(name)});
  }
  if (volume) {
    jobs.push_back({preset + "_" + reading + "_volume", reading, spec,
                    std::nullopt});
  }
  return jobs;
}

std::vector<ImagePoint> image_of_points(
    const AffineMap& map, const DomainSample& s, bool compat) {
  std::vector<ImagePoint> out;
  for (const auto& p : s.points) {
    const bool keep = compat ? p.compat == kCompatIn : p.pos == 1;
    if (!keep) continue;
    const qubit2::Vec3 a(p.probe(0), p.probe(1), p.probe(2));
    const qubit2::Vec3 b = qubit2::bloch_image(map, a);
    out.push_back({p.probe, RealVector(b)});
  }
  return out;
}

}  // namespace

JointStateCoeffs fig1_spec(bool diagonal_free) {
  JointStateCoeffs c = JointStateCoeffs::zeros(2, 2);
  for (int k = 1; k <= 3; ++k) {
    c.coeff(0, k) = 0.25;
    for (int j = 1; j <= 3; ++j) {
      if (j != k) c.coeff(j, k) = 0.25;
    }
    c.free_mask(k, k) = diagonal_free;
  }
  return c;
}

qubit2::IntHamParams fig1a_params() {
  return {{2.0 * std::sqrt(5.0), 2.0 * std::sqrt(3.0), 2.0 * std::sqrt(2.0)}};
}

JointStateCoeffs fig2_spec() {
  JointStateCoeffs c = JointStateCoeffs::zeros(2, 2);
  c.coeff(0, 1) = 1.0 / std::sqrt(3.0);
  c.coeff(3, 1) = 1.0 / std::sqrt(3.0);
  return c;
}

std::vector<std::string> preset_names() { return {"fig1", "fig1a", "fig2"}; }

PresetResult run_preset(const std::string& name, const PresetOptions& o) {
  if (o.resolution < 2 || o.shells < 1 || o.curve_points < 3) {
    throw ValidationError("preset: resolution, shells or curve size too small");
  }
  PresetResult result;
  result.name = name;
  Writer writer(o, result);
  const std::vector<std::string> all(std::begin(kSections), std::end(kSections));
  std::vector<Job> jobs;
  if (name == "fig1") {
    for (const bool free : {true, false}) {
      const auto j = section_jobs(name, free ? "partial" : "full",
                                  fig1_spec(free), true, all);
      jobs.insert(jobs.end(), j.begin(), j.end());
    }
    run_jobs(jobs, o, result, writer);
  } else if (name == "fig1a") {
    result.map = qubit2::int_ham_map(fig1a_params(), fig1_spec(true));
    for (const bool free : {true, false}) {
      const auto j = section_jobs(name, free ? "partial" : "full",
                                  fig1_spec(free), false, {"p1p2"});
      jobs.insert(jobs.end(), j.begin(), j.end());
    }
    run_jobs(jobs, o, result, writer);
    const AffineMap& map = *result.map;
    const DomainSample& s = result.samples.at("fig1a_partial_p1p2");
    struct ImageJob {
      std::string stem;
      std::string source;
      std::vector<ImagePoint> points;
    };
    const ImageJob images[] = {
        {"fig1a_image_sphere_p1p2", "unit circle of the p1p2 plane",
         image_of_ball(map, Section::parse("p1p2"), o.curve_points)},
        {"fig1a_image_compat_p1p2", "compat-in points of fig1a_partial_p1p2",
         image_of_points(map, s, true)},
        {"fig1a_image_pos_p1p2", "pos-in points of fig1a_partial_p1p2",
         image_of_points(map, s, false)}};
    for (const auto& img : images) {
      writer.image(img.stem, img.points, img.source);
      result.images.emplace(img.stem, img.points);
    }
  } else if (name == "fig2") {
    jobs = section_jobs(name, "full", fig2_spec(), true, all);
    run_jobs(jobs, o, result, writer);
  } else {
    throw ValidationError("unknown preset \"" + name +
                          "\" (expected fig1, fig1a or fig2)");
  }
  return result;
}

}  // namespace affmap::presets
