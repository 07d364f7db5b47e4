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

#include "tomo/state_map.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tomo/error.hpp"

namespace tomo {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

PhaseSpacePoint::PhaseSpacePoint(RVector q) : q_(std::move(q)) {
  if (q_.size() == 0 || q_.size() % 2 != 0) {
    fail(ErrorKind::Validation, "phase-space point needs 2N > 0 coordinates");
  }
  if (!q_.allFinite()) fail(ErrorKind::Validation, "phase-space point has non-finite coordinates");
}

PhaseSpacePoint PhaseSpacePoint::from_px(const RVector& p, const RVector& x) {
  if (p.size() != x.size()) fail(ErrorKind::Validation, "p and x must have equal length");
  RVector q(p.size() + x.size());
  q << p, x;
  return PhaseSpacePoint(std::move(q));
}

Spinor phase_to_spinor(const PhaseSpacePoint& q) {
  const auto n = q.modes();
  CVector psi(n);
  for (Eigen::Index k = 0; k < n; ++k) psi(k) = Complex(q.x()(k), q.p()(k)) * kInvSqrt2;
  return {psi};
}

PhaseSpacePoint spinor_to_phase(const Spinor& s) {
  const auto n = s.size();
  RVector p(n), x(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    x(k) = kSqrt2 * s.amplitudes(k).real();
    p(k) = kSqrt2 * s.amplitudes(k).imag();
  }
  return PhaseSpacePoint::from_px(p, x);
}

DensityMatrix pure_density(const Spinor& s, bool normalize) {
  CMatrix rho = s.amplitudes * s.amplitudes.adjoint();
  if (normalize) {
    const double n2 = s.norm_squared();
    if (!(n2 > 0.0)) fail(ErrorKind::Numerical, "non-normalizable state");
    rho /= n2;
  }
  return {rho};
}

DensityMatrix mixed_density(const MixedEnsemble& e) {
  if (e.states.empty() || e.states.size() != e.weights.size()) {
    fail(ErrorKind::Validation, "ensemble needs one weight per state");
  }
  double total = 0.0;
  for (double w : e.weights) {
    if (!(w >= 0.0)) fail(ErrorKind::Validation, "ensemble weights must be non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    fail(ErrorKind::Validation, "ensemble weights sum to " + std::to_string(total) + ", expected 1");
  }
  const auto n = e.states.front().size();
  CMatrix rho = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < e.states.size(); ++k) {
    if (e.states[k].size() != n) fail(ErrorKind::Validation, "ensemble spinors differ in dimension");
    rho += e.weights[k] * pure_density(e.states[k], true).entries;
  }
  return {rho};
}

DensityDiagnostics diagnose(const DensityMatrix& rho) {
  DensityDiagnostics d;
  d.hermiticity = max_abs(rho.entries - rho.entries.adjoint());
  d.trace_error = std::abs(rho.trace() - 1.0);
  const CMatrix herm = 0.5 * (rho.entries + rho.entries.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

void validate_density(const DensityMatrix& rho, double trace_tol) {
  if (rho.entries.rows() == 0 || rho.entries.rows() != rho.entries.cols()) {
    fail(ErrorKind::Validation, "density matrix must be square and non-empty");
  }
  const auto d = diagnose(rho);
  if (d.hermiticity > 1e-12) {
    fail(ErrorKind::Validation, "density matrix not Hermitian (residual " + std::to_string(d.hermiticity) + ")");
  }
  if (d.trace_error > trace_tol) {
    fail(ErrorKind::Validation, "density matrix trace differs from 1 by " + std::to_string(d.trace_error));
  }
  if (d.min_eigenvalue < -1e-10) {
    fail(ErrorKind::Validation, "density matrix not positive semidefinite (eigenvalue " +
                                    std::to_string(d.min_eigenvalue) + ")");
  }
}

}  // namespace tomo
