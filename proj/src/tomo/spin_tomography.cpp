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

#include "tomo/spin_tomography.hpp"

#include <cmath>
#include <string>

#include "tomo/error.hpp"

namespace tomo {

namespace {

void require_square(const DensityMatrix& rho) {
  if (rho.entries.rows() == 0 || rho.entries.rows() != rho.entries.cols()) {
    fail(ErrorKind::Validation, "density matrix must be square and non-empty");
  }
}

void require_unit_trace(const DensityMatrix& rho) {
  require_square(rho);
  const double err = std::abs(rho.trace() - 1.0);
  if (err > 1e-9) {
    fail(ErrorKind::Validation, "tomogram needs a normalized density matrix (|Tr rho - 1| = " +
                                    std::to_string(err) + ")");
  }
}

SpinTomogram sample(const DensityMatrix& rho, std::vector<Direction> dirs) {
  SpinTomogram tom;
  tom.spin = rho.spin();
  const auto dim = static_cast<std::size_t>(tom.dimension());
  tom.values.assign(dirs.size() * dim, 0.0);
  parallel_for(dirs.size(), [&](std::size_t i) {
    const auto diag = frame_diagonal(rho.entries, tom.spin, dirs[i].phi, dirs[i].theta);
    for (std::size_t k = 0; k < dim; ++k) tom.values[i * dim + k] = diag[k];
  });
  tom.directions = std::move(dirs);
  return tom;
}

}  // namespace

DensityMatrix rotate_density(const DensityMatrix& rho, const EulerAngles& angles) {
  require_square(rho);
  const CMatrix D = wigner_D_matrix(rho.spin(), angles);
  return {D * rho.entries * D.adjoint()};
}

std::vector<double> frame_diagonal(const CMatrix& rho, HalfInt j, double phi, double theta, double psi) {
  if (rho.rows() != spin_dimension(j)) fail(ErrorKind::Validation, "density matrix dimension mismatch");
  const CMatrix D = wigner_D_matrix(j, EulerAngles::make(phi, theta, psi));
  const CMatrix rotated = D.adjoint() * rho * D;
  std::vector<double> diag(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index k = 0; k < rho.rows(); ++k) diag[static_cast<std::size_t>(k)] = rotated(k, k).real();
  return diag;
}

SpinTomogram tomogram(const DensityMatrix& rho, std::span<const Direction> directions) {
  require_unit_trace(rho);
  return sample(rho, std::vector<Direction>(directions.begin(), directions.end()));
}

SpinTomogram tomogram(const DensityMatrix& rho, const QuadratureGrid& grid) {
  require_unit_trace(rho);
  std::vector<Direction> dirs;
  std::vector<double> weights;
  for (const auto& n : grid.sphere_nodes()) {
    dirs.push_back({n.phi, n.theta});
    weights.push_back(n.weight);
  }
  SpinTomogram tom = sample(rho, std::move(dirs));
  tom.weights = std::move(weights);
  tom.band_limit = grid.band_limit();
  return tom;
}

Reconstruction reconstruct(const SpinTomogram& tom) {
  const HalfInt j = tom.spin;
  const int dim = tom.dimension();
  const std::size_t ndir = tom.directions.size();
  if (tom.weights.size() != ndir || ndir == 0) {
    fail(ErrorKind::Numerical, "reconstruction needs a tomogram sampled on a quadrature grid");
  }
  if (tom.values.size() != ndir * static_cast<std::size_t>(dim)) {
    fail(ErrorKind::Validation, "tomogram value table has the wrong size");
  }
  if (tom.band_limit < dim) {
    fail(ErrorKind::Numerical, "quadrature under-resolved for spin j=" + std::to_string(j.value()) +
                                   " (band limit " + std::to_string(tom.band_limit) + " < " +
                                   std::to_string(dim) + ")");
  }
  for (std::size_t i = 0; i < ndir; ++i) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) s += tom.values[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)];
    if (std::abs(s - 1.0) > 1e-9) {
      fail(ErrorKind::Validation, "tomogram not normalized at direction " + std::to_string(i));
    }
  }

  const int max_j3 = j.twice();  // j3 = 0..2j
  // moments[j3][m3 + j3][m1 index] = Int w(m1) e^{i m3 phi} d^{j3}_{0 m3} dw / 8pi^2
  std::vector<std::vector<std::vector<Complex>>> moments(static_cast<std::size_t>(max_j3) + 1);
  for (int j3 = 0; j3 <= max_j3; ++j3) {
    moments[static_cast<std::size_t>(j3)].assign(static_cast<std::size_t>(2 * j3 + 1),
                                                 std::vector<Complex>(static_cast<std::size_t>(dim)));
  }

  // Kernel values per direction, then pairwise reduction over directions.
  std::vector<std::vector<RMatrix>> dmats(ndir);
  parallel_for(ndir, [&](std::size_t i) {
    dmats[i].reserve(static_cast<std::size_t>(max_j3) + 1);
    for (int j3 = 0; j3 <= max_j3; ++j3) {
      dmats[i].push_back(small_d_matrix(HalfInt::from_twice(2 * j3), tom.directions[i].theta));
    }
  });
  std::vector<Complex> terms(ndir);
  for (int j3 = 0; j3 <= max_j3; ++j3) {
    const HalfInt J3 = HalfInt::from_twice(2 * j3);
    const int zero_row = basis_index(J3, HalfInt{});
    for (int m3 = -j3; m3 <= j3; ++m3) {
      const int col = basis_index(J3, HalfInt::from_twice(2 * m3));
      for (int m1 = 0; m1 < dim; ++m1) {
        for (std::size_t i = 0; i < ndir; ++i) {
          const double w = tom.values[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(m1)];
          const double d = dmats[i][static_cast<std::size_t>(j3)](zero_row, col);
          const double scale = tom.weights[i] / (4.0 * kPi);
          terms[i] = std::polar(scale * w * d, m3 * tom.directions[i].phi);
        }
        moments[static_cast<std::size_t>(j3)][static_cast<std::size_t>(m3 + j3)][static_cast<std::size_t>(m1)] =
            pairwise_sum(std::span<const Complex>(terms));
      }
    }
  }

  CMatrix rho = CMatrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    const HalfInt ma = basis_projection(j, a);
    for (int b = 0; b < dim; ++b) {
      const HalfInt mb = basis_projection(j, b);
      const HalfInt m3 = mb - ma;
      Complex sum = 0.0;
      for (int j3 = std::abs(m3.twice()) / 2; j3 <= max_j3; ++j3) {
        const HalfInt J3 = HalfInt::from_twice(2 * j3);
        const double outer = three_j(j, j, J3, ma, -mb, m3);
        if (outer == 0.0) continue;
        Complex inner = 0.0;
        for (int m1 = 0; m1 < dim; ++m1) {
          const HalfInt mm1 = basis_projection(j, m1);
          const double diag3j = three_j(j, j, J3, mm1, -mm1, HalfInt{});
          if (diag3j == 0.0) continue;
          const int e = (ma - mm1).twice() / 2;
          const double sign = (e % 2 == 0) ? 1.0 : -1.0;
          inner += sign * diag3j *
                   moments[static_cast<std::size_t>(j3)][static_cast<std::size_t>(m3.twice() / 2 + j3)]
                          [static_cast<std::size_t>(m1)];
        }
        const double f = 2.0 * j3 + 1.0;
        sum += f * f * outer * inner;
      }
      rho(a, b) = sum;
    }
  }

  Reconstruction out;
  out.asymmetry = 0.5 * max_abs(rho - rho.adjoint());
  out.rho.entries = 0.5 * (rho + rho.adjoint());
  const double trace_err = std::abs(out.rho.trace() - 1.0);
  if (trace_err > 1e-9) {
    fail(ErrorKind::Numerical, "reconstructed trace deviates from 1 by " + std::to_string(trace_err));
  }
  return out;
}

}  // namespace tomo
