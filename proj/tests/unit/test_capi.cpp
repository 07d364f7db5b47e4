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


#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "tomo/tomo.h"

TEST_CASE("error reporting") {
  double v = 0.0;
  CHECK(tomo_small_d(2, 4, 0, 0.5, &v) == TOMO_ERR_DOMAIN);
  CHECK(std::strlen(tomo_last_error()) > 0);
  CHECK(tomo_small_d(2, 2, 0, 0.5, nullptr) == TOMO_ERR_DOMAIN);
  CHECK(tomo_small_d(2, 2, 0, 0.5, &v) == TOMO_OK);
  CHECK(std::string(tomo_last_error()).empty());
  CHECK(v == doctest::Approx(-std::sin(0.5) / std::sqrt(2.0)));
  CHECK(tomo_exit_code(TOMO_OK) == 0);
  CHECK(tomo_exit_code(TOMO_ERR_NUMERICAL) == 4);
}

TEST_CASE("rotation algebra") {
  double v = 0.0;
  CHECK(tomo_three_j(2, 2, 0, 2, -2, 0, &v) == TOMO_OK);
  CHECK(v == doctest::Approx(1.0 / std::sqrt(3.0)));
  tomo_complex d{};
  CHECK(tomo_wigner_D(1, 1, 1, 0.4, 0.0, 0.0, &d) == TOMO_OK);
  CHECK(d.re == doctest::Approx(std::cos(0.2)));
  CHECK(d.im == doctest::Approx(-std::sin(0.2)));
  size_t count = 0;
  CHECK(tomo_sphere_nodes(3, nullptr, nullptr, nullptr, 0, &count) == TOMO_OK);
  CHECK(count == 21);
  std::vector<double> phi(count), theta(count), w(count);
  CHECK(tomo_sphere_nodes(3, phi.data(), theta.data(), w.data(), 5, &count) == TOMO_ERR_DOMAIN);
  CHECK(tomo_sphere_nodes(3, phi.data(), theta.data(), w.data(), count, &count) == TOMO_OK);
  double total = 0.0;
  for (double x : w) total += x;
  CHECK(total == doctest::Approx(4 * M_PI));
}

TEST_CASE("spin tomography through handles") {
  const tomo_complex psi[3] = {{0.6, 0.0}, {0.0, 0.64}, {0.48, 0.0}};
  tomo_density* rho = nullptr;
  REQUIRE(tomo_density_pure(3, psi, 1, &rho) == TOMO_OK);
  CHECK(tomo_density_dim(rho) == 3);
  tomo_tomogram* tom = nullptr;
  REQUIRE(tomo_tomogram_compute(rho, 0, &tom) == TOMO_OK);
  CHECK(tomo_tomogram_twice_j(tom) == 2);
  CHECK(tomo_tomogram_directions(tom) == 21);
  double sum = 0.0, w = 0.0;
  for (int m = -2; m <= 2; m += 2) {
    CHECK(tomo_tomogram_value(tom, 5, m, &w) == TOMO_OK);
    sum += w;
  }
  CHECK(sum == doctest::Approx(1.0));
  CHECK(tomo_tomogram_value(tom, 5, 1, &w) == TOMO_ERR_DOMAIN);
  CHECK(tomo_tomogram_value(tom, 999, 0, &w) == TOMO_ERR_DOMAIN);
  tomo_density* back = nullptr;
  REQUIRE(tomo_tomogram_reconstruct(tom, &back) == TOMO_OK);
  std::vector<tomo_complex> a(9), b(9);
  tomo_density_entries(rho, a.data());
  tomo_density_entries(back, b.data());
  for (int i = 0; i < 9; ++i) {
    CHECK(std::abs(a[i].re - b[i].re) < 1e-12);
    CHECK(std::abs(a[i].im - b[i].im) < 1e-12);
  }
  tomo_density_free(back);
  tomo_tomogram_free(tom);
  tomo_density_free(rho);

  const tomo_complex bad[4] = {{1, 0}, {1, 0}, {0, 0}, {0, 0}};
  tomo_density* nope = nullptr;
  CHECK(tomo_density_from_matrix(2, bad, &nope) == TOMO_ERR_VALIDATION);
  CHECK(nope == nullptr);
  const double weights[2] = {0.5, 0.5};
  const tomo_complex states[4] = {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
  CHECK(tomo_density_mixed(2, 2, weights, states, &nope) == TOMO_OK);
  tomo_density_free(nope);
}

TEST_CASE("dynamics") {
  double up = 0.0, lo = 0.0;
  CHECK(tomo_two_level_energies(1.0, {0.0, 0.0}, -1.0, &up, &lo) == TOMO_OK);
  CHECK(up == doctest::Approx(1.0));
  CHECK(lo == doctest::Approx(-1.0));
  const tomo_complex h[4] = {{1, 0}, {0, 0}, {0, 0}, {-1, 0}};
  const tomo_complex psi0[2] = {{1, 0}, {0, 0}};
  tomo_complex psi[2];
  CHECK(tomo_evolve_quantum(2, h, psi0, M_PI, psi) == TOMO_OK);
  CHECK(psi[0].re == doctest::Approx(-1.0));
  double q0[4], q[4];
  CHECK(tomo_spinor_to_phase(2, psi0, q0) == TOMO_OK);
  CHECK(tomo_evolve_classical(2, h, q0, M_PI, q) == TOMO_OK);
  tomo_complex mapped[2];
  CHECK(tomo_phase_to_spinor(2, q, mapped) == TOMO_OK);
  CHECK(std::abs(mapped[0].re - psi[0].re) < 1e-12);
  double f[2];
  CHECK(tomo_normal_modes(2, h, f) == TOMO_OK);
  CHECK(f[0] == doctest::Approx(1.0));
  const tomo_complex nh[4] = {{1, 0}, {2, 0}, {0, 0}, {1, 0}};
  CHECK(tomo_evolve_quantum(2, nh, psi0, 1.0, psi) == TOMO_ERR_VALIDATION);
}

TEST_CASE("canonical transformations") {
  const double squeeze[4] = {2.0, 0.0, 0.0, 0.5};
  double r = 1.0;
  CHECK(tomo_symplectic_residual(1, squeeze, &r) == TOMO_OK);
  CHECK(r == 0.0);
  tomo_complex u, v;
  CHECK(tomo_bogolyubov_from_symplectic(1, squeeze, &u, &v) == TOMO_OK);
  CHECK(u.re == doctest::Approx(1.25));
  CHECK(v.re == doctest::Approx(-0.75));
  const double bad[4] = {2.0, 0.0, 0.0, 2.0};
  CHECK(tomo_bogolyubov_from_symplectic(1, bad, &u, &v) == TOMO_ERR_VALIDATION);
  CHECK(std::string(tomo_last_error()).find("symplectic residual") != std::string::npos);
  const tomo_complex psi{0.6, 0.8};
  tomo_complex out;
  CHECK(tomo_transform_spinor(1, squeeze, &psi, &out) == TOMO_OK);
  // p' = 2p, x' = x/2.
  CHECK(out.re == doctest::Approx(0.3));
  CHECK(out.im == doctest::Approx(1.6));
}

TEST_CASE("continuous variables") {
  const int n = 256;
  std::vector<tomo_complex> psi(n);
  for (int i = 0; i < n; ++i) {
    const double y = -8.0 + 16.0 * i / (n - 1);
    psi[i] = {std::pow(M_PI, -0.25) * std::exp(-y * y / 2), 0.0};
  }
  std::vector<double> w(33);
  CHECK(tomo_cv_tomogram(n, -8, 8, psi.data(), 0.6, 0.8, 33, -4, 4, w.data()) == TOMO_OK);
  CHECK(w[16] == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-10));
  CHECK(tomo_cv_tomogram(n, -8, 8, psi.data(), 0.0, 0.0, 33, -4, 4, w.data()) == TOMO_ERR_VALIDATION);
  std::vector<double> W((2 * n - 1) * 41);
  CHECK(tomo_cv_wigner(n, -8, 8, psi.data(), 41, -4, 4, W.data()) == TOMO_OK);
  CHECK(W[(n - 1) * 41 + 20] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("scenario handles") {
  tomo_scenario* s = nullptr;
  CHECK(tomo_scenario_load(TOMO_SCENARIO_DIR "/invalid/non_hermitian.json", &s) == TOMO_ERR_VALIDATION);
  CHECK(s == nullptr);
  REQUIRE(tomo_scenario_load(TOMO_SCENARIO_DIR "/energies_two_level.json", &s) == TOMO_OK);
  CHECK(std::string(tomo_scenario_kind(s)) == "energies");
  CHECK(tomo_scenario_set(s, "hamiltonian", "1") == TOMO_ERR_PARSE);
  const std::string out = std::string(TOMO_WORK_DIR) + "/capi_energies.csv";
  CHECK(tomo_scenario_set_output(s, out.c_str(), "csv") == TOMO_OK);
  int code = -1;
  char summary[256];
  CHECK(tomo_scenario_execute(s, &code, summary, sizeof summary) == TOMO_OK);
  CHECK(code == 0);
  CHECK(std::string(summary).find("energies: N=2") == 0);
  char tiny[8];
  CHECK(tomo_scenario_execute(s, &code, tiny, sizeof tiny) == TOMO_OK);
  CHECK(std::strlen(tiny) == 7);
  tomo_scenario_free(s);
}
