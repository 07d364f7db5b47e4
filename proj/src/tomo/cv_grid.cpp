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

#include "tomo/cv_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tomo/error.hpp"
#include "tomo/parallel.hpp"

namespace tomo {

Grid1D::Grid1D(double min, double max, int n) : min_(min), max_(max), n_(n) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
    fail(ErrorKind::Validation, "grid needs finite bounds with max > min");
  }
  if (n < 8) fail(ErrorKind::Validation, "grid needs at least 8 points, got " + std::to_string(n));
}

double Grid1D::max_abs() const { return std::max(std::abs(min_), std::abs(max_)); }

double trapezoid(const Grid1D& grid, const std::vector<double>& values) {
  std::vector<double> terms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) terms[i] = grid.weight(static_cast<int>(i)) * values[i];
  return pairwise_sum(terms);
}

double WaveFunction1D::norm_squared() const {
  std::vector<double> d(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) d[static_cast<std::size_t>(i)] = std::norm(values(i));
  return trapezoid(grid, d);
}

void WaveFunction1D::require_normalized() const {
  if (values.size() != grid.size()) fail(ErrorKind::Validation, "wavefunction sample count differs from grid");
  const double n = norm_squared();
  if (std::abs(n - 1.0) > 1e-6) {
    fail(ErrorKind::Validation, "wavefunction not normalized (Int |psi|^2 = " + std::to_string(n) + ")");
  }
}

DensityGrid DensityGrid::from_wavefunction(const WaveFunction1D& psi) {
  return {psi.grid, psi.values * psi.values.adjoint()};
}

Complex DensityGrid::trace() const {
  std::vector<double> re, im;
  for (int i = 0; i < grid.size(); ++i) {
    re.push_back(values(i, i).real());
    im.push_back(values(i, i).imag());
  }
  return {trapezoid(grid, re), trapezoid(grid, im)};
}

double WignerGrid::normalization() const {
  std::vector<double> rows(static_cast<std::size_t>(qgrid.size()));
  for (int i = 0; i < qgrid.size(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(pgrid.size()));
    for (int k = 0; k < pgrid.size(); ++k) row[static_cast<std::size_t>(k)] = values(i, k);
    rows[static_cast<std::size_t>(i)] = trapezoid(pgrid, row);
  }
  return trapezoid(qgrid, rows) / (2.0 * kPi);
}

TomographyAxis TomographyAxis::make(double mu, double nu) {
  if (!std::isfinite(mu) || !std::isfinite(nu)) fail(ErrorKind::Validation, "axis parameters must be finite");
  if (mu == 0.0 && nu == 0.0) fail(ErrorKind::Validation, "tomography axis needs mu^2 + nu^2 > 0");
  return {mu, nu};
}

double TomographyAxis::radius() const { return std::hypot(mu, nu); }

WaveFunction1D hermite_function(int n, const Grid1D& grid) {
  if (n < 0) fail(ErrorKind::Domain, "Hermite index must be non-negative");
  CVector v(grid.size());
  const double c0 = std::pow(kPi, -0.25);
  for (int i = 0; i < grid.size(); ++i) {
    const double y = grid.point(i);
    double prev = 0.0;
    double cur = c0 * std::exp(-0.5 * y * y);
    for (int k = 0; k < n; ++k) {
      const double next = std::sqrt(2.0 / (k + 1.0)) * y * cur - std::sqrt(k / (k + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
    v(i) = cur;
  }
  return {grid, v};
}

WaveFunction1D coherent_state(double q0, double p0, const Grid1D& grid) {
  CVector v(grid.size());
  const double c0 = std::pow(kPi, -0.25);
  for (int i = 0; i < grid.size(); ++i) {
    const double y = grid.point(i);
    v(i) = std::polar(c0 * std::exp(-0.5 * (y - q0) * (y - q0)), p0 * y);
  }
  return {grid, v};
}

WaveFunction1D hermite_superposition(const std::vector<Complex>& coefficients, const Grid1D& grid) {
  double norm2 = 0.0;
  for (const auto& c : coefficients) norm2 += std::norm(c);
  if (!(norm2 > 0.0)) fail(ErrorKind::Validation, "superposition needs a nonzero coefficient");
  CVector v = CVector::Zero(grid.size());
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    v += coefficients[n] * hermite_function(static_cast<int>(n), grid).values;
  }
  return {grid, v / std::sqrt(norm2)};
}

double coherent_tomogram(double x, const TomographyAxis& axis, double q0, double p0) {
  const double r2 = axis.mu * axis.mu + axis.nu * axis.nu;
  const double d = x - axis.mu * q0 - axis.nu * p0;
  return std::exp(-d * d / r2) / std::sqrt(kPi * r2);
}

}  // namespace tomo
