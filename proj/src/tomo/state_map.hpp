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

#include "tomo/types.hpp"
#include "tomo/wigner.hpp"

namespace tomo {

// Classical state of N oscillators, stored as Q = (p_1..p_N, x_1..x_N).
class PhaseSpacePoint {
 public:
  PhaseSpacePoint() = default;
  // Throws ErrorKind::Validation on odd/zero length or non-finite entries.
  explicit PhaseSpacePoint(RVector q);
  static PhaseSpacePoint from_px(const RVector& p, const RVector& x);

  Eigen::Index modes() const { return q_.size() / 2; }
  const RVector& coordinates() const { return q_; }
  auto p() const { return q_.head(modes()); }
  auto x() const { return q_.tail(modes()); }

 private:
  RVector q_;
};

// Psi_k = (x_k + i p_k) / sqrt(2). Not normalized.
struct Spinor {
  CVector amplitudes;

  Eigen::Index size() const { return amplitudes.size(); }
  double norm_squared() const { return amplitudes.squaredNorm(); }
};

// N x N density matrix of spin j = (N-1)/2.
struct DensityMatrix {
  CMatrix entries;

  Eigen::Index size() const { return entries.rows(); }
  HalfInt spin() const { return spin_from_dimension(static_cast<int>(entries.rows())); }
  Complex trace() const { return entries.trace(); }
};

struct MixedEnsemble {
  std::vector<double> weights;
  std::vector<Spinor> states;
};

Spinor phase_to_spinor(const PhaseSpacePoint& q);
PhaseSpacePoint spinor_to_phase(const Spinor& s);

// rho = Psi Psi^dagger, divided by |Psi|^2 when normalize is set.
// Throws ErrorKind::Numerical ("non-normalizable state") for a zero spinor
// with normalize set.
DensityMatrix pure_density(const Spinor& s, bool normalize);

// rho = sum_k w_k |Psi_k><Psi_k| / |Psi_k|^2.
DensityMatrix mixed_density(const MixedEnsemble& e);

// Residuals used to validate externally supplied density matrices.
struct DensityDiagnostics {
  double hermiticity = 0.0;        // max |rho - rho^dagger|
  double trace_error = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;
};
DensityDiagnostics diagnose(const DensityMatrix& rho);

// Throws ErrorKind::Validation when rho is not Hermitian (1e-12), not unit
// trace (trace_tol) or has an eigenvalue below -1e-10.
void validate_density(const DensityMatrix& rho, double trace_tol = 1e-12);

}  // namespace tomo
