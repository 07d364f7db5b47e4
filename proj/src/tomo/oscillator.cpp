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

#include "tomo/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tomo/error.hpp"
#include "tomo/expm.hpp"

namespace tomo {

HermitianHamiltonian HermitianHamiltonian::make(CMatrix entries) {
  if (entries.rows() == 0 || entries.rows() != entries.cols()) {
    fail(ErrorKind::Validation, "Hamiltonian must be a non-empty square matrix");
  }
  if (!entries.allFinite()) fail(ErrorKind::Validation, "Hamiltonian has non-finite entries");
  const double r = max_abs(entries - entries.adjoint());
  if (r > 1e-12) {
    fail(ErrorKind::Validation, "Hamiltonian not Hermitian (residual " + std::to_string(r) + ")");
  }
  return {std::move(entries)};
}

HermitianHamiltonian HermitianHamiltonian::two_level(double a, Complex b, double c) {
  CMatrix h(2, 2);
  h << a, b, std::conj(b), c;
  return make(std::move(h));
}

DoubledGenerator doubled_generator(const HermitianHamiltonian& H) {
  const auto n = H.size();
  CMatrix h = CMatrix::Zero(2 * n, 2 * n);
  h.topLeftCorner(n, n) = H.entries;
  h.bottomRightCorner(n, n) = -H.entries.conjugate();
  return {h};
}

QuadraticFormB build_B(const HermitianHamiltonian& H) {
  const HermitianHamiltonian checked = HermitianHamiltonian::make(H.entries);
  const auto n = checked.size();
  const RMatrix re = checked.entries.real();
  const RMatrix im = checked.entries.imag();
  RMatrix B(2 * n, 2 * n);
  B << re, im, -im, re;
  return {B};
}

RMatrix FlowMatrix::sigma(Eigen::Index modes) {
  RMatrix s = RMatrix::Zero(2 * modes, 2 * modes);
  s.topRightCorner(modes, modes) = RMatrix::Identity(modes, modes);
  s.bottomLeftCorner(modes, modes) = -RMatrix::Identity(modes, modes);
  return s;
}

FlowMatrix build_A(const QuadraticFormB& B) {
  if (B.B.rows() == 0 || B.B.rows() != B.B.cols() || B.B.rows() % 2 != 0) {
    fail(ErrorKind::Validation, "B must be a square matrix of even size");
  }
  return {-FlowMatrix::sigma(B.B.rows() / 2) * B.B};
}

double classical_energy(const QuadraticFormB& B, const PhaseSpacePoint& q) {
  return 0.5 * q.coordinates().dot(B.B * q.coordinates());
}

TwoLevelEnergies two_level_energies(double a, Complex b, double c) {
  const double mean = 0.5 * (a + c);
  // (a+c)^2 + 4(|b|^2 - ac) rearranged as (a-c)^2 + 4|b|^2 to avoid cancellation.
  const double half_gap = 0.5 * std::sqrt((a - c) * (a - c) + 4.0 * std::norm(b));
  return {mean + half_gap, mean - half_gap};
}

Spinor evolve_quantum(const HermitianHamiltonian& H, const Spinor& psi0, double t) {
  if (psi0.size() != H.size()) fail(ErrorKind::Validation, "spinor and Hamiltonian dimensions differ");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H.entries);
  const CMatrix& v = es.eigenvectors();
  CVector c = v.adjoint() * psi0.amplitudes;
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::polar(1.0, -es.eigenvalues()(k) * t);
  return {v * c};
}

PhaseSpacePoint evolve_classical(const FlowMatrix& A, const PhaseSpacePoint& q0, double t) {
  if (q0.coordinates().size() != A.A.rows()) {
    fail(ErrorKind::Validation, "phase-space point and flow matrix dimensions differ");
  }
  const RMatrix at = A.A * t;
  return PhaseSpacePoint(expm(at) * q0.coordinates());
}

std::vector<double> normal_mode_frequencies(const FlowMatrix& A) {
  Eigen::EigenSolver<RMatrix> es(A.A, false);
  if (es.info() != Eigen::Success) fail(ErrorKind::Numerical, "eigenvalue computation failed");
  std::vector<double> freq;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const Complex lambda = es.eigenvalues()(k);
    if (std::abs(lambda.real()) > 1e-8) {
      fail(ErrorKind::Numerical, "non-oscillatory mode (Re lambda = " + std::to_string(lambda.real()) + ")");
    }
    freq.push_back(std::abs(lambda.imag()));
  }
  std::sort(freq.begin(), freq.end());
  std::vector<double> pairs;
  for (std::size_t k = 0; k < freq.size(); k += 2) pairs.push_back(0.5 * (freq[k] + freq[k + 1]));
  return pairs;
}

}  // namespace tomo
