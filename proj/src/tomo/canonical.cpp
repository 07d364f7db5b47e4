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

#include "tomo/canonical.hpp"

#include <algorithm>
#include <string>

#include "tomo/error.hpp"
#include "tomo/expm.hpp"
#include "tomo/oscillator.hpp"

namespace tomo {

namespace {

void require_even_square(const RMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols() || m.rows() % 2 != 0) {
    fail(ErrorKind::Validation, std::string(what) + " must be a square matrix of even size");
  }
}

}  // namespace

double symplectic_residual(const RMatrix& lambda) {
  require_even_square(lambda, "symplectic matrix");
  const RMatrix sigma = FlowMatrix::sigma(lambda.rows() / 2);
  return max_abs(lambda.transpose() * sigma * lambda - sigma);
}

SymplecticMatrix validate_symplectic(const RMatrix& lambda) {
  if (!lambda.allFinite()) fail(ErrorKind::Validation, "symplectic matrix has non-finite entries");
  const double r = symplectic_residual(lambda);
  if (r > 1e-10) fail(ErrorKind::Validation, "symplectic residual " + std::to_string(r) + " exceeds 1e-10");
  SymplecticMatrix s;
  s.lambda_ = lambda;
  return s;
}

RMatrix symplectic_from_generator(const RMatrix& s) {
  require_even_square(s, "generator");
  if (max_abs(s - s.transpose()) > 1e-12) fail(ErrorKind::Validation, "generator must be symmetric");
  return expm(FlowMatrix::sigma(s.rows() / 2) * s);
}

BogolyubovResiduals bogolyubov_residuals(const BogolyubovPair& uv) {
  const auto n = uv.u.rows();
  const CMatrix uvt = uv.u * uv.v.transpose();
  return {max_abs(uv.u * uv.u.adjoint() - uv.v * uv.v.adjoint() - CMatrix::Identity(n, n)),
          max_abs(uvt - uvt.transpose())};
}

BogolyubovPair uv_from_symplectic(const SymplecticMatrix& lambda) {
  const CMatrix l1 = lambda.block(0, 0).cast<Complex>();
  const CMatrix l2 = lambda.block(0, 1).cast<Complex>();
  const CMatrix l3 = lambda.block(1, 0).cast<Complex>();
  const CMatrix l4 = lambda.block(1, 1).cast<Complex>();
  BogolyubovPair uv{0.5 * (l1 + kI * l2) + 0.5 * (l4 - kI * l3), 0.5 * (l4 + kI * l3) - 0.5 * (l1 - kI * l2)};
  const auto r = bogolyubov_residuals(uv);
  const double scale = std::max(1.0, max_abs(lambda.matrix()) * max_abs(lambda.matrix()));
  if (r.unitarity > 1e-10 * scale || r.symmetry > 1e-10 * scale) {
    fail(ErrorKind::Numerical, "Bogolyubov conditions violated (" + std::to_string(r.unitarity) + ", " +
                                   std::to_string(r.symmetry) + ")");
  }
  return uv;
}

BogolyubovPair point_transform_uv(const RMatrix& lambda1) {
  if (lambda1.rows() == 0 || lambda1.rows() != lambda1.cols()) {
    fail(ErrorKind::Validation, "point transformation needs a square matrix");
  }
  Eigen::FullPivLU<RMatrix> lu(lambda1);
  if (!lu.isInvertible()) fail(ErrorKind::Validation, "point transformation matrix is singular");
  const auto n = lambda1.rows();
  RMatrix lambda = RMatrix::Zero(2 * n, 2 * n);
  lambda.topLeftCorner(n, n) = lambda1;
  lambda.bottomRightCorner(n, n) = lu.inverse().transpose();
  return uv_from_symplectic(validate_symplectic(lambda));
}

BogolyubovPair compose(const BogolyubovPair& outer, const BogolyubovPair& inner) {
  return {outer.u * inner.u + outer.v * inner.v.conjugate(), outer.u * inner.v + outer.v * inner.u.conjugate()};
}

Spinor transform_spinor(const BogolyubovPair& uv, const Spinor& psi) {
  if (psi.size() != uv.u.cols()) fail(ErrorKind::Validation, "spinor and transformation dimensions differ");
  return {uv.u * psi.amplitudes + uv.v * psi.amplitudes.conjugate()};
}

ConjugateMoment conjugate_moment(const Spinor& psi) {
  return {psi.amplitudes * psi.amplitudes.transpose()};
}

CMatrix transform_density(const BogolyubovPair& uv, const DensityMatrix& rho, const ConjugateMoment& sigma) {
  const CMatrix& r = rho.entries;
  const CMatrix& s = sigma.sigma;
  const auto n = uv.u.rows();
  if (r.rows() != n || r.cols() != n || s.rows() != n || s.cols() != n) {
    fail(ErrorKind::Validation, "density, moment and transformation dimensions differ");
  }
  const Complex tr = r.trace();
  const double scale = std::max(1.0, std::norm(tr));
  const double residual = std::max({max_abs(s - s.transpose()), max_abs(r * s - tr * s),
                                    max_abs(s * s.conjugate() - tr * r), max_abs(r * r - tr * r)});
  if (residual > 1e-8 * scale) {
    fail(ErrorKind::Validation, "inconsistent (rho, sigma) pair: not a pure-state moment pair (residual " +
                                    std::to_string(residual) + ")");
  }
  const CMatrix ua = uv.u.adjoint();
  const CMatrix va = uv.v.adjoint();
  return uv.u * r * ua + uv.v * r.conjugate() * va + uv.v * s.conjugate() * ua + uv.u * s * va;
}

SpinTomogram transformed_tomogram(const BogolyubovPair& uv, const Spinor& psi,
                                  std::span<const Direction> directions, bool renormalize) {
  if (!(psi.norm_squared() > 0.0)) fail(ErrorKind::Validation, "transformed tomogram needs a nonzero spinor");
  const CMatrix rho_t = transform_density(uv, pure_density(psi, false), conjugate_moment(psi));
  const double norm2 = rho_t.trace().real();
  if (!(norm2 > 0.0)) fail(ErrorKind::Numerical, "zero transformed state");

  SpinTomogram tom;
  tom.spin = spin_from_dimension(static_cast<int>(rho_t.rows()));
  tom.directions.assign(directions.begin(), directions.end());
  const auto dim = static_cast<std::size_t>(tom.dimension());
  tom.values.assign(directions.size() * dim, 0.0);
  const double scale = renormalize ? 1.0 / norm2 : 1.0;
  parallel_for(directions.size(), [&](std::size_t i) {
    const auto diag = frame_diagonal(rho_t, tom.spin, directions[i].phi, directions[i].theta);
    for (std::size_t k = 0; k < dim; ++k) tom.values[i * dim + k] = scale * diag[k];
  });
  return tom;
}

}  // namespace tomo
