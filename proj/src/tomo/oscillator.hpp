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

#pragma once

#include <vector>

#include "tomo/state_map.hpp"

namespace tomo {

// N x N Hermitian Hamiltonian acting on spinors.
struct HermitianHamiltonian {
  CMatrix entries;

  // Throws ErrorKind::Validation unless entries is square and Hermitian
  // within 1e-12.
  static HermitianHamiltonian make(CMatrix entries);
  // [[a, b], [conj(b), c]].
  static HermitianHamiltonian two_level(double a, Complex b, double c);

  Eigen::Index size() const { return entries.rows(); }
};

// h = diag(H, -conj(H)) acting on xi = (Psi, conj(Psi)). Diagnostic only;
// evolution works on Psi directly.
struct DoubledGenerator {
  CMatrix h;
};
DoubledGenerator doubled_generator(const HermitianHamiltonian& H);

// Real symmetric 2N x 2N matrix with Hamiltonian (1/2) Q^T B Q, Q = (p, x).
struct QuadraticFormB {
  RMatrix B;
};

// A = -Sigma B with Sigma = [[0, I], [-I, 0]].
struct FlowMatrix {
  RMatrix A;

  Eigen::Index modes() const { return A.rows() / 2; }
  static RMatrix sigma(Eigen::Index modes);
};

// B = (1/2) [[H + H*, i(H* - H)], [i(H - H*), H + H*]] = [[Re H, Im H], [-Im H, Re H]].
QuadraticFormB build_B(const HermitianHamiltonian& H);
FlowMatrix build_A(const QuadraticFormB& B);

// (1/2) Q^T B Q.
double classical_energy(const QuadraticFormB& B, const PhaseSpacePoint& q);

struct TwoLevelEnergies {
  double upper = 0.0;  // E1
  double lower = 0.0;  // E2
};
// E_{1,2} = (a+c)/2 +- (1/2) sqrt((a+c)^2 + 4(|b|^2 - ac)).
TwoLevelEnergies two_level_energies(double a, Complex b, double c);

// exp(-i H t) psi0 through the Hermitian eigendecomposition of H.
Spinor evolve_quantum(const HermitianHamiltonian& H, const Spinor& psi0, double t);

// exp(A t) q0 through the Pade matrix exponential.
PhaseSpacePoint evolve_classical(const FlowMatrix& A, const PhaseSpacePoint& q0, double t);

// Sorted |Im lambda| over the eigenvalue pairs +-i omega of A; one entry
// per pair. Throws ErrorKind::Numerical ("non-oscillatory mode") when some
// eigenvalue has |Re lambda| > 1e-8.
std::vector<double> normal_mode_frequencies(const FlowMatrix& A);

}  // namespace tomo
