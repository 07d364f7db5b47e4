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

#include <span>

#include "tomo/spin_tomography.hpp"
#include "tomo/state_map.hpp"

namespace tomo {

// Real 2N x 2N matrix with Lambda^T Sigma Lambda = Sigma, blocks
// [[l1, l2], [l3, l4]] in the (p, x) ordering.
class SymplecticMatrix {
 public:
  const RMatrix& matrix() const { return lambda_; }
  Eigen::Index modes() const { return lambda_.rows() / 2; }
  RMatrix block(int row, int col) const {
    return lambda_.block(row * modes(), col * modes(), modes(), modes());
  }

 private:
  friend SymplecticMatrix validate_symplectic(const RMatrix& lambda);
  RMatrix lambda_;
};

// max |Lambda^T Sigma Lambda - Sigma|.
double symplectic_residual(const RMatrix& lambda);

// Throws ErrorKind::Validation ("symplectic residual ...") beyond 1e-10.
SymplecticMatrix validate_symplectic(const RMatrix& lambda);

// exp(Sigma S) for symmetric S; always symplectic.
RMatrix symplectic_from_generator(const RMatrix& s);

// Psi' = u Psi + v conj(Psi).
struct BogolyubovPair {
  CMatrix u;
  CMatrix v;
};

struct BogolyubovResiduals {
  double unitarity = 0.0;  // max |u u^dagger - v v^dagger - I|
  double symmetry = 0.0;   // max |u v^T - (u v^T)^T|
};
BogolyubovResiduals bogolyubov_residuals(const BogolyubovPair& uv);

// u = (l1 + i l2)/2 + (l4 - i l3)/2, v = (l4 + i l3)/2 - (l1 - i l2)/2.
BogolyubovPair uv_from_symplectic(const SymplecticMatrix& lambda);

// Point transformation Lambda = diag(l1, l1^{-T}); throws
// ErrorKind::Validation for singular l1.
BogolyubovPair point_transform_uv(const RMatrix& lambda1);

// Pair applying `inner` first and then `outer`.
BogolyubovPair compose(const BogolyubovPair& outer, const BogolyubovPair& inner);

Spinor transform_spinor(const BogolyubovPair& uv, const Spinor& psi);

// sigma = Psi Psi^T.
struct ConjugateMoment {
  CMatrix sigma;
};
ConjugateMoment conjugate_moment(const Spinor& psi);

// rho' = u rho u^dagger + v rho* v^dagger + v sigma* u^dagger + u sigma v^dagger
// for rho = Psi Psi^dagger, sigma = Psi Psi^T from the same pure Psi.
// Throws ErrorKind::Validation when (rho, sigma) is not such a pair (1e-8).
CMatrix transform_density(const BogolyubovPair& uv, const DensityMatrix& rho, const ConjugateMoment& sigma);

// w'(m, n) = diagonal of rho' in the frame rotated to n, rho' from
// transform_density with rho = Psi Psi^dagger. Sums to |Psi'|^2 over m
// unless renormalize is set. Throws ErrorKind::Numerical when Psi' = 0.
SpinTomogram transformed_tomogram(const BogolyubovPair& uv, const Spinor& psi,
                                  std::span<const Direction> directions, bool renormalize = false);

}  // namespace tomo
