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


#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>

#include "support.hpp"
#include "tomo/expm.hpp"
#include "tomo/oscillator.hpp"

using namespace tomo;

TEST_CASE("Hamiltonian validation") {
  CMatrix m(2, 2);
  m << 1.0, Complex(0, 1), Complex(0, 1), 1.0;
  CHECK_KIND(HermitianHamiltonian::make(m), Validation);
  CHECK_KIND(HermitianHamiltonian::make(CMatrix(2, 3)), Validation);
  CHECK_NOTHROW(HermitianHamiltonian::two_level(1.0, Complex(0.5, -1), -1.0));
}

TEST_CASE("two-level energies") {
  auto e = two_level_energies(1.0, 0.0, -1.0);
  CHECK(e.upper == doctest::Approx(1.0));
  CHECK(e.lower == doctest::Approx(-1.0));
  // (a + c)/2 +- sqrt(((a - c)/2)^2 + |b|^2) with a = 2, b = 0.5 - i, c = -1.
  e = two_level_energies(2.0, Complex(0.5, -1.0), -1.0);
  CHECK(e.upper == doctest::Approx(0.5 + std::sqrt(3.5)).epsilon(1e-15));
  CHECK(e.lower == doctest::Approx(0.5 - std::sqrt(3.5)).epsilon(1e-15));
  // Degenerate and nearly degenerate levels.
  e = two_level_energies(3.0, 0.0, 3.0);
  CHECK(e.upper == 3.0);
  CHECK(e.lower == 3.0);
  e = two_level_energies(1e8, 1e-4, 1e8);
  CHECK(e.upper - e.lower == doctest::Approx(2e-4).epsilon(1e-8));
}

TEST_CASE("flow matrix structure") {
  const auto H = HermitianHamiltonian::make(testing::random_hermitian(3));
  const QuadraticFormB B = build_B(H);
  CHECK(max_abs(B.B - B.B.transpose()) == 0.0);
  const FlowMatrix A = build_A(B);
  CHECK(max_abs(A.A + A.A.transpose()) < 1e-15);
  const RMatrix s = FlowMatrix::sigma(3);
  CHECK(max_abs(s * s + RMatrix::Identity(6, 6)) == 0.0);
  // (1/2) Q^T B Q = Psi^dagger H Psi.
  const Spinor psi = testing::random_spinor(3);
  const double quantum = (psi.amplitudes.adjoint() * H.entries * psi.amplitudes)(0).real();
  CHECK(classical_energy(B, spinor_to_phase(psi)) == doctest::Approx(quantum).epsilon(1e-14));
}

TEST_CASE("matrix exponential") {
  RMatrix rot(2, 2);
  rot << 0.0, 2.5, -2.5, 0.0;
  const RMatrix e = expm(rot);
  CHECK(e(0, 0) == doctest::Approx(std::cos(2.5)).epsilon(1e-15));
  CHECK(e(0, 1) == doctest::Approx(std::sin(2.5)).epsilon(1e-15));
  RMatrix nil(2, 2);
  nil << 0.0, 50.0, 0.0, 0.0;
  CHECK(max_abs(expm(nil) - (RMatrix(2, 2) << 1.0, 50.0, 0.0, 1.0).finished()) < 1e-12);
  CHECK(max_abs(expm(RMatrix::Zero(3, 3)) - RMatrix::Identity(3, 3)) == 0.0);
  for (double scale : {0.01, 1.0, 30.0}) {
    RMatrix m(6, 6);
    for (int i = 0; i < 6; ++i) {
      for (int k = 0; k < 6; ++k) m(i, k) = scale * testing::normal();
    }
    m = m - m.transpose().eval();  // skew: exp is orthogonal
    const RMatrix ref = m.exp();
    CHECK(max_abs(expm(m) - ref) < 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("diagonal evolution") {
  const auto H = HermitianHamiltonian::make((CMatrix(2, 2) << 1.0, 0.0, 0.0, -1.0).finished());
  CVector v(2);
  v << 1.0, 0.0;
  const Spinor psi = evolve_quantum(H, Spinor{v}, kPi);
  CHECK(std::abs(psi.amplitudes(0) + 1.0) < 1e-15);
  CHECK(std::abs(psi.amplitudes(1)) < 1e-15);
  const PhaseSpacePoint q = evolve_classical(build_A(build_B(H)), spinor_to_phase(Spinor{v}), kPi);
  CHECK(std::abs(q.x()(0) + std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(q.p()(0)) < 1e-14);
}

TEST_CASE("quantum and classical pictures agree") {
  for (int n : {2, 5}) {
    const auto H = HermitianHamiltonian::make(testing::random_hermitian(n));
    const Spinor psi = testing::random_spinor(n);
    const FlowMatrix A = build_A(build_B(H));
    for (double t : {0.0, 0.3, 7.0}) {
      const PhaseSpacePoint q = evolve_classical(A, spinor_to_phase(psi), t);
      const CVector direct = (Complex(0, -t) * H.entries).exp() * psi.amplitudes;
      CHECK(max_abs(spinor_to_phase(Spinor{direct}).coordinates() - q.coordinates()) < 1e-11);
      CHECK(max_abs(evolve_quantum(H, psi, t).amplitudes - direct) < 1e-11);
      CHECK(classical_energy(build_B(H), q) == doctest::Approx(classical_energy(build_B(H), spinor_to_phase(psi))));
    }
  }
}

TEST_CASE("normal modes") {
  CMatrix h = CMatrix::Zero(3, 3);
  h.diagonal() << 0.5, -2.0, 3.0;
  const auto f = normal_mode_frequencies(build_A(build_B(HermitianHamiltonian::make(h))));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == doctest::Approx(0.5));
  CHECK(f[1] == doctest::Approx(2.0));
  CHECK(f[2] == doctest::Approx(3.0));
  // A generic real A with growing modes is rejected.
  FlowMatrix unstable{(RMatrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished()};
  CHECK_KIND(normal_mode_frequencies(unstable), Numerical);
}
