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
#include <vector>

#include "tomo/quadrature.hpp"
#include "tomo/state_map.hpp"

namespace tomo {

// Quantization axis n(phi, theta).
struct Direction {
  double phi = 0.0;
  double theta = 0.0;
};

// w(m, phi, theta): probability of spin projection m along each direction.
struct SpinTomogram {
  HalfInt spin;
  std::vector<Direction> directions;
  // Row-major [direction][m], m = +j..-j.
  std::vector<double> values;
  // Sphere weights (sum 4 pi) when the directions are quadrature nodes.
  std::vector<double> weights;
  // Band limit of the generating QuadratureGrid, 0 otherwise.
  int band_limit = 0;

  int dimension() const { return spin_dimension(spin); }
  double value(std::size_t direction, HalfInt m) const {
    return values[direction * static_cast<std::size_t>(dimension()) +
                  static_cast<std::size_t>(basis_index(spin, m))];
  }
};

// D rho D^dagger with D = D^j(angles).
DensityMatrix rotate_density(const DensityMatrix& rho, const EulerAngles& angles);

// Diagonal of rho seen from the frame rotated by (phi, theta, psi):
// (D^dagger rho D)_mm. Independent of psi.
std::vector<double> frame_diagonal(const CMatrix& rho, HalfInt j, double phi, double theta,
                                   double psi = 0.0);

// Throws ErrorKind::Validation unless Tr rho = 1 within 1e-9.
SpinTomogram tomogram(const DensityMatrix& rho, std::span<const Direction> directions);
SpinTomogram tomogram(const DensityMatrix& rho, const QuadratureGrid& grid);

struct Reconstruction {
  DensityMatrix rho;
  // max |rho - rho^dagger| / 2 before Hermitization.
  double asymmetry = 0.0;
};

// Inverts a quadrature-sampled tomogram:
//
//   rho_{ab} = sum_{j3=0}^{2j} (2 j3 + 1)^2 sum_{m1} (-1)^{a - m1}
//              (j j j3; m1 -m1 0) (j j j3; a -b m3)
//              Int w(m1, phi, theta) e^{i m3 phi} d^{j3}_{0 m3}(theta) dw / 8 pi^2,
//
// with m3 = b - a. Relative to the commonly printed form, the sign factor is
// (-1)^{a - m1} instead of (-1)^{b + m1} (they differ by (-1)^{m3 + 2j}) and
// the kernel carries e^{+i m3 phi}; both follow from w being the diagonal in
// the rotated frame under the z-y-z convention used here. The (2 j3 + 1)^2
// constant is as printed.
//
// The psi integral only contributes 2 pi and is done analytically. Requires
// band_limit >= 2j + 1 (ErrorKind::Numerical otherwise).
Reconstruction reconstruct(const SpinTomogram& tom);

}  // namespace tomo
