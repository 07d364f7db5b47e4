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

#include "support.hpp"
#include "tomo/quadrature.hpp"
#include "tomo/spin_tomography.hpp"

using namespace tomo;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }

DensityMatrix basis_state(int dim, int index) {
  CMatrix m = CMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix{m};
}
}  // namespace

TEST_CASE("spin-1/2 tomogram of the +z state") {
  const Direction dirs[] = {{0.0, 0.0}, {0.3, 1.0}, {2.0, kPi / 2}, {-1.0, kPi}};
  const SpinTomogram t = tomogram(basis_state(2, 0), dirs);
  for (std::size_t i = 0; i < 4; ++i) {
    const double c = std::cos(dirs[i].theta / 2);
    CHECK(t.value(i, h(1)) == doctest::Approx(c * c).epsilon(1e-15));
    CHECK(t.value(i, h(-1)) == doctest::Approx(1 - c * c).epsilon(1e-15));
  }
}

TEST_CASE("spin-1 tomogram of m = 0") {
  // w(m, theta) = |d^1_{0 m}(theta)|^2.
  const Direction dirs[] = {{0.7, 0.9}};
  const SpinTomogram t = tomogram(basis_state(3, 1), dirs);
  const double s = std::sin(0.9), c = std::cos(0.9);
  CHECK(t.value(0, h(2)) == doctest::Approx(s * s / 2));
  CHECK(t.value(0, h(0)) == doctest::Approx(c * c));
  CHECK(t.value(0, h(-2)) == doctest::Approx(s * s / 2));
}

TEST_CASE("frame diagonal does not depend on psi") {
  const DensityMatrix rho = testing::random_mixed(4, 2);
  const auto a = frame_diagonal(rho.entries, h(3), 0.4, 1.2, 0.0);
  const auto b = frame_diagonal(rho.entries, h(3), 0.4, 1.2, 2.1);
  for (std::size_t m = 0; m < a.size(); ++m) CHECK(std::abs(a[m] - b[m]) < 1e-14);
}

TEST_CASE("active rotation about y") {
  // Rotating |+z> by pi/2 about y gives |+x>.
  const DensityMatrix r = rotate_density(basis_state(2, 0), EulerAngles{0.0, kPi / 2, 0.0});
  CHECK(r.entries(0, 1).real() == doctest::Approx(0.5));
  CHECK(r.entries(0, 0).real() == doctest::Approx(0.5));
  // The tomogram at n equals the diagonal of the counter-rotated state.
  const DensityMatrix rho = testing::random_mixed(3, 2);
  const SpinTomogram t = tomogram(rho, std::vector<Direction>{{0.8, 2.0}});
  const CMatrix d = wigner_D_matrix(h(2), EulerAngles{0.8, 2.0, 0.0});
  const CMatrix framed = d.adjoint() * rho.entries * d;
  for (int m = 0; m < 3; ++m) CHECK(t.values[static_cast<std::size_t>(m)] == doctest::Approx(framed(m, m).real()));
}

TEST_CASE("round trip for pure and mixed states") {
  for (int twice = 1; twice <= 6; ++twice) {
    const int d = twice + 1;
    const QuadratureGrid g = sphere_quadrature(d);
    for (int k = 0; k < 3; ++k) {
      const DensityMatrix rho = (k == 0) ? pure_density(testing::random_spinor(d), false) : testing::random_mixed(d, k + 1);
      const Reconstruction r = reconstruct(tomogram(rho, g));
      CHECK(max_abs(r.rho.entries - rho.entries) < 1e-12);
      CHECK(r.asymmetry < 1e-12);
    }
  }
}

TEST_CASE("oversampled quadrature also reconstructs") {
  const DensityMatrix rho = testing::random_mixed(3, 3);
  CHECK(max_abs(reconstruct(tomogram(rho, sphere_quadrature(6))).rho.entries - rho.entries) < 1e-12);
}

TEST_CASE("tomogram preconditions") {
  const DensityMatrix rho = testing::random_mixed(3, 2);
  CHECK_KIND(reconstruct(tomogram(rho, sphere_quadrature(2))), Numerical);
  CHECK_KIND(reconstruct(tomogram(rho, std::vector<Direction>{{0.0, 0.5}})), Numerical);
  DensityMatrix unnormalized = rho;
  unnormalized.entries *= 2.0;
  CHECK_KIND(tomogram(unnormalized, sphere_quadrature(3)), Validation);
  SpinTomogram t = tomogram(rho, sphere_quadrature(3));
  t.values[0] += 0.1;
  CHECK_KIND(reconstruct(t), Validation);
}

TEST_CASE("tomogram is a probability distribution") {
  const DensityMatrix rho = testing::random_mixed(5, 3);
  const SpinTomogram t = tomogram(rho, sphere_quadrature(5));
  for (std::size_t n = 0; n < t.directions.size(); ++n) {
    double sum = 0.0;
    for (int m = 0; m < 5; ++m) {
      const double w = t.values[n * 5 + static_cast<std::size_t>(m)];
      CHECK(w >= -1e-14);
      sum += w;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  }
}
