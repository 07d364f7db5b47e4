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

#include <unsupported/Eigen/MatrixFunctions>

#include "support.hpp"
#include "tomo/canonical.hpp"
#include "tomo/oscillator.hpp"
#include "tomo/quadrature.hpp"
#include "tomo/spin_tomography.hpp"

using namespace tomo;

namespace {

RMatrix random_symmetric(int n, double scale) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) m(i, k) = scale * testing::normal();
  }
  return (m + m.transpose()) / 2.0;
}

SymplecticMatrix random_symplectic(int modes) {
  return validate_symplectic(symplectic_from_generator(random_symmetric(2 * modes, 0.4)));
}

}  // namespace

TEST_CASE("symplectic validation names the residual") {
  RMatrix m(2, 2);
  m << 2.0, 0.0, 0.0, 2.0;
  CHECK(symplectic_residual(m) == doctest::Approx(3.0));
  try {
    validate_symplectic(m);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
    CHECK(std::string(e.what()).find("symplectic residual") != std::string::npos);
  }
  CHECK_KIND(validate_symplectic(RMatrix::Identity(3, 3)), Validation);
  CHECK_KIND(symplectic_from_generator((RMatrix(2, 2) << 0.0, 1.0, 0.0, 0.0).finished()), Validation);
}

TEST_CASE("single-mode squeeze") {
  // Lambda = diag(2, 1/2): u = (2 + 1/2)/2, v = (1/2 - 2)/2.
  RMatrix l(2, 2);
  l << 2.0, 0.0, 0.0, 0.5;
  const BogolyubovPair uv = uv_from_symplectic(validate_symplectic(l));
  CHECK(uv.u(0, 0).real() == doctest::Approx(1.25));
  CHECK(uv.v(0, 0).real() == doctest::Approx(-0.75));
  CHECK(std::abs(uv.u(0, 0).imag()) + std::abs(uv.v(0, 0).imag()) == 0.0);
  const BogolyubovPair pt = point_transform_uv((RMatrix(1, 1) << 2.0).finished());
  CHECK(max_abs(pt.u - uv.u) < 1e-15);
  CHECK(max_abs(pt.v - uv.v) < 1e-15);
  CHECK_KIND(point_transform_uv(RMatrix::Zero(2, 2)), Validation);
}

TEST_CASE("Bogolyubov invariants and commuting diagram") {
  for (int n : {1, 2, 4}) {
    const SymplecticMatrix lambda = random_symplectic(n);
    const BogolyubovPair uv = uv_from_symplectic(lambda);
    const auto r = bogolyubov_residuals(uv);
    CHECK(r.unitarity < 1e-12);
    CHECK(r.symmetry < 1e-12);
    const Spinor psi{testing::random_vector(n)};
    const RVector moved = lambda.matrix() * spinor_to_phase(psi).coordinates();
    CHECK(max_abs(phase_to_spinor(PhaseSpacePoint(moved)).amplitudes - transform_spinor(uv, psi).amplitudes) < 1e-13);
  }
}

TEST_CASE("composition matches the matrix product") {
  const SymplecticMatrix a = random_symplectic(2);
  const SymplecticMatrix b = random_symplectic(2);
  const BogolyubovPair ab = compose(uv_from_symplectic(a), uv_from_symplectic(b));
  const BogolyubovPair direct = uv_from_symplectic(validate_symplectic(a.matrix() * b.matrix()));
  CHECK(max_abs(ab.u - direct.u) < 1e-12);
  CHECK(max_abs(ab.v - direct.v) < 1e-12);
}

TEST_CASE("unitary subgroup leaves v = 0") {
  // Time evolution exp(A t) is symplectic with v = 0, u = exp(-iHt).
  const auto H = HermitianHamiltonian::make(testing::random_hermitian(3));
  const RMatrix flow = (build_A(build_B(H)).A * 0.7).exp();
  const BogolyubovPair uv = uv_from_symplectic(validate_symplectic(flow));
  CHECK(max_abs(uv.v) < 1e-13);
  const Spinor psi = testing::random_spinor(3);
  CHECK(max_abs(uv.u * psi.amplitudes - evolve_quantum(H, psi, 0.7).amplitudes) < 1e-12);
}

TEST_CASE("density transformation") {
  const BogolyubovPair uv = uv_from_symplectic(random_symplectic(3));
  const Spinor psi = testing::random_spinor(3);
  const CMatrix rho = transform_density(uv, pure_density(psi, false), conjugate_moment(psi));
  const CVector out = transform_spinor(uv, psi).amplitudes;
  CHECK(max_abs(rho - out * out.adjoint()) < 1e-12);
  // A mixed density has no single conjugate moment.
  const DensityMatrix mixed = testing::random_mixed(3, 2);
  CHECK_KIND(transform_density(uv, mixed, conjugate_moment(psi)), Validation);
}

TEST_CASE("transformed tomogram factorizes") {
  const BogolyubovPair uv = uv_from_symplectic(random_symplectic(3));
  const Spinor psi = testing::random_spinor(3);
  std::vector<Direction> dirs;
  for (const auto& n : sphere_quadrature(3).sphere_nodes()) dirs.push_back({n.phi, n.theta});
  const SpinTomogram raw = transformed_tomogram(uv, psi, dirs);
  const SpinTomogram unit = transformed_tomogram(uv, psi, dirs, true);
  const Spinor out = transform_spinor(uv, psi);
  const SpinTomogram direct = tomogram(pure_density(out, true), dirs);
  for (std::size_t i = 0; i < raw.values.size(); ++i) {
    CHECK(raw.values[i] == doctest::Approx(out.norm_squared() * direct.values[i]).epsilon(1e-12));
    CHECK(unit.values[i] == doctest::Approx(direct.values[i]).epsilon(1e-12));
  }
}
