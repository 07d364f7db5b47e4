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
#include <string>

#include "support.hpp"
#include "tomo/cv_tomography.hpp"

using namespace tomo;

namespace {

double gaussian(double x, double var, double mean = 0.0) {
  return std::exp(-(x - mean) * (x - mean) / (2 * var)) / std::sqrt(2 * kPi * var);
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const Grid1D kY(-8.0, 8.0, 512);

}  // namespace

TEST_CASE("grids") {
  const Grid1D g(-1.0, 1.0, 11);
  CHECK(g.spacing() == doctest::Approx(0.2));
  CHECK(g.point(10) == 1.0);
  CHECK(g.weight(0) == doctest::Approx(0.1));
  CHECK(g.max_abs() == 1.0);
  CHECK_KIND(Grid1D(0.0, 1.0, 7), Validation);
  CHECK_KIND(Grid1D(1.0, 1.0, 16), Validation);
  CHECK_KIND(TomographyAxis::make(0.0, 0.0), Validation);
}

TEST_CASE("Hermite functions are orthonormal") {
  for (int a = 0; a < 6; ++a) {
    const CVector fa = hermite_function(a, kY).values;
    for (int b = 0; b < 6; ++b) {
      const CVector fb = hermite_function(b, kY).values;
      Complex s = 0.0;
      for (int i = 0; i < kY.size(); ++i) s += kY.weight(i) * std::conj(fa(i)) * fb(i);
      CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
  }
  WaveFunction1D bad = hermite_function(0, kY);
  bad.values *= 1.1;
  CHECK_KIND(bad.require_normalized(), Validation);
}

TEST_CASE("trigonometric interpolation is exact for band-limited samples") {
  for (int n : {16, 17}) {
    const Grid1D g(0.0, 1.0 - 1.0 / n, n);  // period 1
    CVector s(n);
    auto f = [](double y) { return Complex(std::cos(2 * kPi * 3 * y), std::sin(2 * kPi * 2 * y) + 0.5); };
    for (int i = 0; i < n; ++i) s(i) = f(g.point(i));
    const std::vector<double> pts = {0.013, 0.31, 0.5, 0.77, 0.9};
    const CVector v = detail::trig_interpolate(g, s, pts);
    for (std::size_t k = 0; k < pts.size(); ++k) CHECK(std::abs(v(static_cast<Eigen::Index>(k)) - f(pts[k])) < 1e-13);
  }
}

TEST_CASE("ground-state tomogram is Gaussian") {
  const WaveFunction1D psi = hermite_function(0, kY);
  for (auto [mu, nu] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{0.3, -0.4}, std::pair{2.0, 0.1},
                        std::pair{0.1, 2.0}, std::pair{-1.5, 1.5}}) {
    const auto w = tomogram_wavefunction(psi, TomographyAxis{mu, nu}, kY);
    std::vector<double> ref;
    for (int i = 0; i < kY.size(); ++i) ref.push_back(gaussian(kY.point(i), (mu * mu + nu * nu) / 2));
    CHECK(max_gap(w, ref) < 1e-10);
  }
}

TEST_CASE("coherent-state tomogram is displaced") {
  const WaveFunction1D psi = coherent_state(0.7, -1.1, kY);
  const TomographyAxis axis{0.8, 0.6};
  const auto w = tomogram_wavefunction(psi, axis, kY);
  for (int i = 0; i < kY.size(); i += 17) {
    CHECK(std::abs(w[static_cast<std::size_t>(i)] - gaussian(kY.point(i), 0.5, 0.8 * 0.7 + 0.6 * -1.1)) < 1e-10);
    CHECK(coherent_tomogram(kY.point(i), axis, 0.7, -1.1) ==
          doctest::Approx(gaussian(kY.point(i), 0.5, 0.8 * 0.7 + 0.6 * -1.1)));
  }
}

TEST_CASE("position axis limit is continuous") {
  const WaveFunction1D psi = hermite_superposition({1.0, Complex(0.5, 0.5), 0.3}, kY);
  const Grid1D x(-6.0, 6.0, 241);
  const auto limit = tomogram_wavefunction(psi, TomographyAxis{1.3, 1e-4}, x);   // nu -> 0 branch
  const auto chirp = tomogram_wavefunction(psi, TomographyAxis{1.3, 2e-3}, x);   // chirp branch
  CHECK(max_gap(limit, chirp) < 5e-3);
  const auto exact = tomogram_wavefunction(psi, TomographyAxis{1.3, 0.0}, x);
  CHECK(max_gap(limit, exact) < 1e-3);
}

TEST_CASE("density route") {
  const WaveFunction1D psi = hermite_superposition({0.5, 0.0, Complex(0, 1)}, kY);
  const DensityGrid rho = DensityGrid::from_wavefunction(psi);
  for (auto [mu, nu] : {std::pair{0.6, 0.8}, std::pair{-1.0, 0.5}}) {
    const TomographyAxis axis{mu, nu};
    CHECK(max_gap(tomogram_density(rho, axis, kY), tomogram_wavefunction(psi, axis, kY)) < 1e-9);
  }
  // Without resampling a coarse grid cannot follow the chirp.
  const Grid1D coarse(-8.0, 8.0, 64);
  CHECK_KIND(tomogram_density(DensityGrid::from_wavefunction(hermite_function(0, coarse)), TomographyAxis{3.0, 0.05}, coarse),
             Numerical);
  DensityGrid skew = rho;
  skew.values(3, 5) += 0.1;
  CHECK_KIND(tomogram_density(skew, TomographyAxis{1.0, 1.0}, kY), Validation);
}

TEST_CASE("Wigner function of Fock states") {
  const Grid1D p(-6.0, 6.0, 241);
  for (int n = 0; n < 3; ++n) {
    const WignerGrid w = wigner_from_density(DensityGrid::from_wavefunction(hermite_function(n, kY)), p);
    CHECK(w.qgrid.size() == 2 * kY.size() - 1);
    CHECK(w.imag_residual < 1e-12);
    CHECK(w.normalization() == doctest::Approx(1.0).epsilon(1e-10));
    // W_n(0, 0) = 2 (-1)^n.
    CHECK(w.values(kY.size() - 1, 120) == doctest::Approx(n % 2 ? -2.0 : 2.0).epsilon(1e-10));
  }
}

TEST_CASE("Wigner round trip") {
  const WaveFunction1D psi = hermite_superposition({1.0, Complex(0.3, -0.2), 0.0, 0.4}, kY);
  const DensityGrid rho = DensityGrid::from_wavefunction(psi);
  const WignerGrid w = wigner_from_density(rho, Grid1D(-8.0, 8.0, 200));
  const DensityGrid back = density_from_wigner(w);
  CHECK(back.grid == rho.grid);
  CHECK(max_abs(back.values - rho.values) < 1e-10);
  CHECK(back.hermiticity() == 0.0);
}

TEST_CASE("Wigner preconditions") {
  const DensityGrid rho = DensityGrid::from_wavefunction(hermite_function(0, kY));
  try {
    wigner_from_density(rho, Grid1D(-60.0, 60.0, 200));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Numerical);
    CHECK(std::string(e.what()).find("grid too coarse") != std::string::npos);
  }
  WignerGrid even{Grid1D(-1.0, 1.0, 16), Grid1D(-1.0, 1.0, 16), RMatrix::Zero(16, 16), 0.0};
  CHECK_KIND(density_from_wigner(even), Validation);
}

TEST_CASE("Radon route matches the wavefunction route") {
  const WaveFunction1D psi = hermite_superposition({1.0, 0.0, Complex(0.0, 0.7)}, kY);
  const WignerGrid w = wigner_from_density(DensityGrid::from_wavefunction(psi), Grid1D(-7.0, 7.0, 281));
  const Grid1D x(-6.0, 6.0, 121);
  for (auto [mu, nu] : {std::pair{1.0, 0.0}, std::pair{0.6, -0.8}, std::pair{0.5, 1.2}}) {
    const TomographyAxis axis{mu, nu};
    CHECK(max_gap(tomogram_from_wigner(w, axis, x), tomogram_wavefunction(psi, axis, x)) < 1e-6);
  }
  // A grid that clips the state is reported.
  const Grid1D small(-1.5, 1.5, 64);
  const WignerGrid clipped = wigner_from_density(DensityGrid::from_wavefunction(hermite_function(0, kY)), small);
  CHECK_KIND(tomogram_from_wigner(clipped, TomographyAxis{1.0, 0.0}, x), Numerical);
}

TEST_CASE("inverse Radon transform of the ground state") {
  TomogramTable t{Grid1D(-40.0, 40.0, 801), Grid1D(-7.0, 7.0, 71), Grid1D(-7.0, 7.0, 71), {}};
  t.values.resize(801u * 71u * 71u);
  for (int a = 0; a < 71; ++a) {
    for (int b = 0; b < 71; ++b) {
      const double r2 = t.mugrid.point(a) * t.mugrid.point(a) + t.nugrid.point(b) * t.nugrid.point(b);
      for (int k = 0; k < 801; ++k) t.at(k, a, b) = r2 > 0 ? gaussian(t.xgrid.point(k), r2 / 2) : 0.0;
    }
  }
  const Grid1D q(-2.0, 2.0, 21);
  const WignerGrid w = wigner_from_tomogram(t, q, q);
  for (int i = 0; i < 21; ++i) {
    for (int k = 0; k < 21; ++k) {
      const double r2 = q.point(i) * q.point(i) + q.point(k) * q.point(k);
      CHECK(std::abs(w.values(i, k) - 2.0 * std::exp(-r2)) < 1e-4);
    }
  }
  CHECK_KIND(wigner_from_tomogram(t, Grid1D(-20.0, 20.0, 21), q), Numerical);
  TomogramTable coarse = t;
  coarse.xgrid = Grid1D(-40.0, 40.0, 41);
  coarse.values.resize(41u * 71u * 71u);
  CHECK_KIND(wigner_from_tomogram(coarse, q, q), Numerical);
}
