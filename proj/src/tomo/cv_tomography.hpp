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

#include "tomo/cv_grid.hpp"

namespace tomo {

// Symplectic tomogram of a wavefunction,
//   w(X, mu, nu) = 1/(2 pi |nu|) |Int exp(i mu y^2 / 2nu - i y X / nu) psi(y) dy|^2,
// by trapezoid quadrature. When the chirp advances more than pi/2 per grid
// step over the support of psi, psi is resampled on a finer grid by
// trigonometric interpolation; this needs psi to vanish at the grid edges
// (ErrorKind::Numerical otherwise). For |nu| < 1e-3 sqrt(mu^2 + nu^2) the
// nu -> 0 limit |psi(X/mu)|^2 / |mu| is used.
std::vector<double> tomogram_wavefunction(const WaveFunction1D& psi, const TomographyAxis& axis,
                                          const Grid1D& xgrid);

// The same tomogram from rho(y, y') by double quadrature,
//   w = 1/(2 pi |nu|) Int rho(y, y') exp(-i (y - y')/nu (X - mu (y + y')/2)) dy dy'.
// No resampling: an under-resolved chirp is an ErrorKind::Numerical error.
std::vector<double> tomogram_density(const DensityGrid& rho, const TomographyAxis& axis, const Grid1D& xgrid);

// W(q, p) = Int rho(q + u/2, q - u/2) e^{-i p u} du.
// The q grid is the half-step lattice of rho's grid (2n - 1 points), so that
// q +- u/2 always falls on grid nodes. Requires max |p| < pi / (2h).
WignerGrid wigner_from_density(const DensityGrid& rho, const Grid1D& pgrid);

// rho(x, x') = 1/(2 pi) Int W((x + x')/2, p) e^{i p (x - x')} dp.
// W's q grid must be a half-step lattice (odd size).
DensityGrid density_from_wigner(const WignerGrid& w);

// w(X, mu, nu) = 1/(2 pi) Int W(q, p) delta(X - mu q - nu p) dq dp as a line
// integral with 6-point Lagrange interpolation in q and p. Throws
// ErrorKind::Numerical ("insufficient grid support") when W is not negligible
// where the line leaves the grid.
std::vector<double> tomogram_from_wigner(const WignerGrid& w, const TomographyAxis& axis, const Grid1D& xgrid);

// W(q, p) = 1/(2 pi) Int w(X, mu, nu) e^{i (X - mu q - nu p)} dX dmu dnu by
// trapezoid quadrature on the table's grid. A (0, 0) axis node uses the
// normalization Int w dX = 1. Throws ErrorKind::Numerical when a grid step
// cannot resolve the oscillatory kernel.
WignerGrid wigner_from_tomogram(const TomogramTable& table, const Grid1D& qgrid, const Grid1D& pgrid);

namespace detail {

// Trigonometric interpolant of periodic samples (period n h) at arbitrary points.
CVector trig_interpolate(const Grid1D& grid, const CVector& samples, const std::vector<double>& points);

}  // namespace detail

}  // namespace tomo
