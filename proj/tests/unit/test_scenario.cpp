// Copyright 2026 The Tomo Authors
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


#include <unistd.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tomo/scenario.hpp"

using namespace tomo;
namespace fs = std::filesystem;

namespace {

const std::string kDir = TOMO_SCENARIO_DIR;

fs::path scratch() {
  const fs::path p = fs::temp_directory_path() / ("tomo-unit-" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Internal;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("every shipped scenario loads") {
  for (const char* name : {"spin_roundtrip_j1", "spin_tomogram_half", "evolve_diag", "energies_two_level",
                           "transform_squeeze", "cv_ground", "wigner_excited", "verify"}) {
    CAPTURE(name);
    CHECK_NOTHROW(Scenario::load(kDir + "/" + name + ".json"));
  }
}

TEST_CASE("load errors map to exit codes") {
  CHECK(kind_of([] { Scenario::load(kDir + "/invalid/malformed.json"); }) == ErrorKind::Parse);
  CHECK(message_of([] { Scenario::load(kDir + "/invalid/malformed.json"); }).find("line 4") != std::string::npos);
  CHECK(kind_of([] { Scenario::load(kDir + "/invalid/non_hermitian.json"); }) == ErrorKind::Validation);
  CHECK(message_of([] { Scenario::load(kDir + "/invalid/not_symplectic.json"); }).find("symplectic residual") !=
        std::string::npos);
  CHECK(kind_of([] { Scenario::load(kDir + "/missing.json"); }) == ErrorKind::Parse);
  CHECK(exit_code(ErrorKind::Parse) == 2);
  CHECK(exit_code(ErrorKind::Validation) == 3);
  CHECK(exit_code(ErrorKind::Numerical) == 4);
  CHECK(exit_code(ErrorKind::Internal) == 5);
}

TEST_CASE("schema diagnostics name the field") {
  const std::string base = R"({"schema": "tomo-scenario/1", "kind": "energies", "output": {"path": "x.csv"}, )";
  CHECK(message_of([&] { Scenario::parse(base + R"("params": {"hamiltonian": [[1, "a"], [0, 1]]}})", "."); })
            .find("params.hamiltonian[0][1]") != std::string::npos);
  CHECK(message_of([&] { Scenario::parse(base + R"("params": {"hamiltonian": [[1]], "extra": 1}})", "."); })
            .find("params.extra") != std::string::npos);
  CHECK(kind_of([] { Scenario::parse(R"({"schema": "tomo-scenario/2", "kind": "verify"})", "."); }) == ErrorKind::Parse);
  CHECK(kind_of([] { Scenario::parse(R"({"schema": "tomo-scenario/1", "kind": "dance"})", "."); }) == ErrorKind::Parse);
  CHECK(kind_of([&] {
          Scenario::parse(R"({"schema": "tomo-scenario/1", "kind": "energies", "params": {"hamiltonian": [[1]]},
                              "output": {"path": "x", "format": "xml"}})", ".");
        }) == ErrorKind::Parse);
}

TEST_CASE("overrides revalidate") {
  Scenario s = Scenario::load(kDir + "/cv_ground.json");
  CHECK_NOTHROW(s.set("mu", "1.5"));
  CHECK(kind_of([&] { s.set("nu", "\"fast\""); }) == ErrorKind::Parse);
  Scenario e = Scenario::load(kDir + "/evolve_diag.json");
  CHECK(kind_of([&] { e.set("steps", "0"); }) == ErrorKind::Validation);
  CHECK(kind_of([&] { e.set("hamiltonian", "3"); }) == ErrorKind::Parse);
}

TEST_CASE("evolve output") {
  const fs::path dir = scratch();
  Scenario s = Scenario::load(kDir + "/evolve_diag.json");
  s.set_output((dir / "traj.csv").string(), "");
  const auto out = s.execute();
  CHECK(out.status == 0);
  std::istringstream lines(slurp(dir / "traj.csv"));
  std::string header, line, last;
  std::getline(lines, header);
  CHECK(header == "t,re_psi_1,re_psi_2,im_psi_1,im_psi_2,p_1,p_2,x_1,x_2,residual");
  int rows = 0;
  while (std::getline(lines, line)) {
    last = line;
    ++rows;
  }
  CHECK(rows == 9);
  // Final row at t = pi: Psi = (-1, 0).
  std::vector<double> v;
  std::stringstream ss(last);
  for (std::string cell; std::getline(ss, cell, ',');) v.push_back(std::stod(cell));
  CHECK(std::abs(v[1] + 1.0) < 1e-10);
  CHECK(std::abs(v[2]) + std::abs(v[3]) + std::abs(v[4]) < 1e-10);
  fs::remove_all(dir);
}

TEST_CASE("execution is deterministic") {
  const fs::path dir = scratch();
  Scenario s = Scenario::load(kDir + "/spin_tomogram_half.json");
  s.set_output((dir / "a.json").string(), "");
  s.execute();
  s.set_output((dir / "b.json").string(), "");
  s.execute();
  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  fs::remove_all(dir);
}

TEST_CASE("CV outputs carry a sidecar") {
  const fs::path dir = scratch();
  Scenario s = Scenario::load(kDir + "/cv_ground.json");
  s.set_output((dir / "w.csv").string(), "");
  const auto out = s.execute();
  REQUIRE(out.paths.size() == 2);
  const std::string meta = slurp(dir / "w.csv.json");
  CHECK(meta.find("\"mu\": 0.6") != std::string::npos);
  CHECK(meta.find("analytic_max_error") != std::string::npos);
  CHECK(out.summary.find("cv-tomogram") == 0);
  fs::remove_all(dir);
}

TEST_CASE("numerical failures leave no files") {
  const fs::path dir = scratch();
  Scenario s = Scenario::load(kDir + "/wigner_excited.json");
  s.set("p_grid.max", "40");
  s.set("p_grid.min", "-40");
  s.set_output((dir / "w.csv").string(), "");
  CHECK(kind_of([&] { s.execute(); }) == ErrorKind::Numerical);
  CHECK(fs::is_empty(dir));
  // Unwritable destination: nothing left behind either.
  Scenario t = Scenario::load(kDir + "/spin_tomogram_half.json");
  t.set_output((dir / "no" / "such" / "dir.json").string(), "");
  CHECK(kind_of([&] { t.execute(); }) == ErrorKind::Internal);
  CHECK(fs::is_empty(dir));
  fs::remove_all(dir);
}

TEST_CASE("spin reconstruct from a tomogram file") {
  const fs::path dir = scratch();
  Scenario t = Scenario::load(kDir + "/spin_tomogram_half.json");
  t.set_output((dir / "tom.json").string(), "json");
  t.execute();
  std::ofstream(dir / "rec.json") << R"({"schema": "tomo-scenario/1", "kind": "spin-reconstruct",
    "params": {"tomogram": "tom.json"}, "output": {"path": ")"
                                  << (dir / "rho.json").string() << R"(", "format": "json"}})";
  Scenario r = Scenario::load((dir / "rec.json").string());
  const auto out = r.execute();
  CHECK(out.summary.find("dim=2") != std::string::npos);
  const std::string rho = slurp(dir / "rho.json");
  CHECK(rho.find("tomo-density/1") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("verify suite passes") {
  Scenario v = Scenario::parse(R"({"schema": "tomo-scenario/1", "kind": "verify"})", ".");
  const auto out = v.execute();
  CHECK(out.status == 0);
  CHECK(out.summary.find("FAILED") == std::string::npos);
}
