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

namespace tomo {

// Uniform grid of n >= 8 points on [min, max].
class Grid1D {
 public:
  Grid1D() = default;
  // Throws ErrorKind::Validation for n < 8 or max <= min.
  Grid1D(double min, double max, int n);

  double min() const { return min_; }
  double max() const { return max_; }
  int size() const { return n_; }
  double spacing() const { return (max_ - min_) / (n_ - 1); }
  double point(int i) const { return i == n_ - 1 ? max_ : min_ + i * spacing(); }
  // Trapezoid weight of node i.
  double weight(int i) const { return (i == 0 || i == n_ - 1) ? 0.5 * spacing() : spacing(); }
  double max_abs() const;

  bool operator==(const Grid1D&) const = default;

 private:
  double min_ = 0.0;
  double max_ = 1.0;
  int n_ = 0;
};

// Trapezoid rule over a grid, summed pairwise.
double trapezoid(const Grid1D& grid, const std::vector<double>& values);

// Samples psi(y).
struct WaveFunction1D {
  Grid1D grid;
  CVector values;

  // Trapezoid integral of |psi|^2.
  double norm_squared() const;
  // Throws ErrorKind::Validation when |norm - 1| > 1e-6.
  void require_normalized() const;
};

// Samples rho(y, y') on grid x grid.
struct DensityGrid {
  Grid1D grid;
  CMatrix values;

  static DensityGrid from_wavefunction(const WaveFunction1D& psi);
  // Trapezoid integral of the diagonal.
  Complex trace() const;
  double hermiticity() const { return tomo::max_abs(values - values.adjoint()); }
};

// W(q, p) samples, values(iq, ip).
struct WignerGrid {
  Grid1D qgrid;
  Grid1D pgrid;
  RMatrix values;
  // Largest discarded imaginary part.
  double imag_residual = 0.0;

  // Int Int W dq dp / 2 pi.
  double normalization() const;
};

// Axis of the observable X = mu q + nu p.
struct TomographyAxis {
  double mu = 0.0;
  double nu = 1.0;

  // Throws ErrorKind::Validation when mu = nu = 0 or an entry is not finite.
  static TomographyAxis make(double mu, double nu);
  double radius() const;
};

// w(X, mu, nu) sampled on a rectangular grid; index [imu][inu][ix].
struct TomogramTable {
  Grid1D xgrid;
  Grid1D mugrid;
  Grid1D nugrid;
  std::vector<double> values;

  double& at(int ix, int imu, int inu) {
    return values[(static_cast<std::size_t>(imu) * nugrid.size() + inu) * xgrid.size() + ix];
  }
  double at(int ix, int imu, int inu) const {
    return values[(static_cast<std::size_t>(imu) * nugrid.size() + inu) * xgrid.size() + ix];
  }
};

// Normalized harmonic-oscillator eigenfunction pi^{-1/4} (2^n n!)^{-1/2} H_n(y) e^{-y^2/2}.
WaveFunction1D hermite_function(int n, const Grid1D& grid);

// pi^{-1/4} exp(-(y - q0)^2 / 2 + i p0 y).
WaveFunction1D coherent_state(double q0, double p0, const Grid1D& grid);

// Normalized sum_n c_n psi_n.
WaveFunction1D hermite_superposition(const std::vector<Complex>& coefficients, const Grid1D& grid);

// Closed-form tomogram of coherent_state(q0, p0): a Gaussian in X centered at
// mu q0 + nu p0 with variance (mu^2 + nu^2) / 2.
double coherent_tomogram(double x, const TomographyAxis& axis, double q0 = 0.0, double p0 = 0.0);

}  // namespace tomo
