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

#include "tomo/cv_tomography.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "tomo/error.hpp"
#include "tomo/parallel.hpp"

namespace tomo {

namespace {

constexpr double kMaxAdvance = 0.5 * kPi;  // chirp phase advance per step
constexpr int kMaxRefinement = 4096;

bool near_position_axis(const TomographyAxis& axis) {
  return std::abs(axis.nu) < 1e-3 * axis.radius();
}

// [lo, hi] index range where magnitude > rel * max, padded by two nodes.
std::pair<int, int> support(const std::vector<double>& magnitude, double rel) {
  const double peak = *std::max_element(magnitude.begin(), magnitude.end());
  const int n = static_cast<int>(magnitude.size());
  int lo = 0, hi = n - 1;
  while (lo < n - 1 && !(magnitude[static_cast<std::size_t>(lo)] > rel * peak)) ++lo;
  while (hi > 0 && !(magnitude[static_cast<std::size_t>(hi)] > rel * peak)) --hi;
  if (lo > hi) return {0, n - 1};
  return {std::max(0, lo - 2), std::min(n - 1, hi + 2)};
}

// Largest chirp frequency |mu y - X| / |nu| over the support and X range.
double chirp_frequency(const TomographyAxis& axis, double ylo, double yhi, const Grid1D& xgrid) {
  double k = 0.0;
  for (double y : {ylo, yhi}) {
    for (double x : {xgrid.min(), xgrid.max()}) k = std::max(k, std::abs(axis.mu * y - x));
  }
  return k / std::abs(axis.nu);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::array<double, 6> lagrange6(double t) {
  std::array<double, 6> w{};
  for (int k = 0; k < 6; ++k) {
    double v = 1.0;
    for (int m = 0; m < 6; ++m) {
      if (m != k) v *= (t - m) / static_cast<double>(k - m);
    }
    w[static_cast<std::size_t>(k)] = v;
  }
  return w;
}

// Stencil start and weights for 6-point interpolation at coordinate c.
std::pair<int, std::array<double, 6>> stencil(const Grid1D& g, double c) {
  const double f = (c - g.min()) / g.spacing();
  int i0 = static_cast<int>(std::floor(f)) - 2;
  i0 = std::clamp(i0, 0, g.size() - 6);
  return {i0, lagrange6(f - i0)};
}

double interpolate(const WignerGrid& w, double q, double p) {
  const auto [iq, wq] = stencil(w.qgrid, q);
  const auto [ip, wp] = stencil(w.pgrid, p);
  double v = 0.0;
  for (int a = 0; a < 6; ++a) {
    double row = 0.0;
    for (int b = 0; b < 6; ++b) row += wp[static_cast<std::size_t>(b)] * w.values(iq + a, ip + b);
    v += wq[static_cast<std::size_t>(a)] * row;
  }
  return v;
}

}  // namespace

namespace detail {

CVector trig_interpolate(const Grid1D& grid, const CVector& samples, const std::vector<double>& points) {
  const int n = static_cast<int>(samples.size());
  const double h = grid.spacing();
  const double period = n * h;
  const int half = n / 2;
  // coef[k] multiplies z^{k - half}, z = exp(2 pi i (y - min) / period).
  const int m = (n % 2 == 0) ? n + 1 : n;
  std::vector<Complex> coef(static_cast<std::size_t>(m), Complex{});
  for (int q = 0; q < n; ++q) {
    Complex c{};
    for (int k = 0; k < n; ++k) {
      const long e = (static_cast<long>(q) * k) % n;
      c += samples(k) * std::polar(1.0, -2.0 * kPi * static_cast<double>(e) / n);
    }
    c /= static_cast<double>(n);
    const int sym = (q <= half) ? q : q - n;  // q in [-half, half]
    if (n % 2 == 0 && std::abs(sym) == half) {
      coef[0] += 0.5 * c;
      coef[static_cast<std::size_t>(m - 1)] += 0.5 * c;
    } else {
      coef[static_cast<std::size_t>(sym + half)] += c;
    }
  }
  CVector out(static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double y = points[i];
    if (y < grid.min() - 1e-12 || y > grid.max() + 1e-12) {
      out(static_cast<Eigen::Index>(i)) = 0.0;
      continue;
    }
    const double t = 2.0 * kPi * (y - grid.min()) / period;
    const Complex z = std::polar(1.0, t);
    Complex acc{};
    for (int k = m - 1; k >= 0; --k) acc = acc * z + coef[static_cast<std::size_t>(k)];
    out(static_cast<Eigen::Index>(i)) = acc * std::polar(1.0, -half * t);
  }
  return out;
}

}  // namespace detail

std::vector<double> tomogram_wavefunction(const WaveFunction1D& psi, const TomographyAxis& axis_in,
                                          const Grid1D& xgrid) {
  const TomographyAxis axis = TomographyAxis::make(axis_in.mu, axis_in.nu);
  psi.require_normalized();
  const Grid1D& g = psi.grid;
  const int nx = xgrid.size();
  std::vector<double> w(static_cast<std::size_t>(nx), 0.0);

  if (near_position_axis(axis)) {
    std::vector<double> pts(static_cast<std::size_t>(nx));
    for (int j = 0; j < nx; ++j) pts[static_cast<std::size_t>(j)] = xgrid.point(j) / axis.mu;
    const CVector v = detail::trig_interpolate(g, psi.values, pts);
    for (int j = 0; j < nx; ++j) w[static_cast<std::size_t>(j)] = std::norm(v(j)) / std::abs(axis.mu);
    return w;
  }

  std::vector<double> mag(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) mag[static_cast<std::size_t>(i)] = std::abs(psi.values(i));
  const auto [lo, hi] = support(mag, 1e-12);
  const double h = g.spacing();
  const double advance = chirp_frequency(axis, g.point(lo), g.point(hi), xgrid) * h;

  int factor = 1;
  if (advance > kMaxAdvance) {
    factor = static_cast<int>(std::ceil(advance / kMaxAdvance));
    const double peak = *std::max_element(mag.begin(), mag.end());
    const bool decayed = mag.front() <= 1e-10 * peak && mag.back() <= 1e-10 * peak;
    if (factor > kMaxRefinement || !decayed) {
      fail(ErrorKind::Numerical, "under-resolved grid: chirp advances " + fmt(advance) +
                                     " rad per step and the wavefunction cannot be resampled");
    }
  }

  // Quadrature nodes over the support, refined by `factor`.
  const int count = (hi - lo) * factor + 1;
  const double hf = h / factor;
  std::vector<double> ys(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) ys[static_cast<std::size_t>(k)] = g.point(lo) + k * hf;
  CVector vals;
  if (factor == 1) {
    vals = psi.values.segment(lo, count);
  } else {
    vals = detail::trig_interpolate(g, psi.values, ys);
  }
  std::vector<Complex> gk(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double y = ys[static_cast<std::size_t>(k)];
    const double wt = (k == 0 || k == count - 1) ? 0.5 * hf : hf;
    gk[static_cast<std::size_t>(k)] = wt * vals(k) * std::polar(1.0, axis.mu * y * y / (2.0 * axis.nu));
  }
  const double norm = 1.0 / (2.0 * kPi * std::abs(axis.nu));
  parallel_for(static_cast<std::size_t>(nx), [&](std::size_t j) {
    const double x = xgrid.point(static_cast<int>(j));
    Complex acc{};
    for (int k = 0; k < count; ++k) {
      acc += gk[static_cast<std::size_t>(k)] * std::polar(1.0, -ys[static_cast<std::size_t>(k)] * x / axis.nu);
    }
    w[j] = norm * std::norm(acc);
  });
  return w;
}

std::vector<double> tomogram_density(const DensityGrid& rho, const TomographyAxis& axis_in, const Grid1D& xgrid) {
  const TomographyAxis axis = TomographyAxis::make(axis_in.mu, axis_in.nu);
  const Grid1D& g = rho.grid;
  if (rho.values.rows() != g.size() || rho.values.cols() != g.size()) {
    fail(ErrorKind::Validation, "density samples do not match the grid");
  }
  if (rho.hermiticity() > 1e-10) fail(ErrorKind::Validation, "density grid not Hermitian");
  const double tr_err = std::abs(rho.trace() - 1.0);
  if (tr_err > 1e-6) fail(ErrorKind::Validation, "density grid trace differs from 1 by " + fmt(tr_err));

  const int nx = xgrid.size();
  std::vector<double> w(static_cast<std::size_t>(nx), 0.0);

  if (near_position_axis(axis)) {
    CVector diag = rho.values.diagonal();
    std::vector<double> pts(static_cast<std::size_t>(nx));
    for (int j = 0; j < nx; ++j) pts[static_cast<std::size_t>(j)] = xgrid.point(j) / axis.mu;
    const CVector v = detail::trig_interpolate(g, diag, pts);
    for (int j = 0; j < nx; ++j) w[static_cast<std::size_t>(j)] = v(j).real() / std::abs(axis.mu);
    return w;
  }

  std::vector<double> mag(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) mag[static_cast<std::size_t>(i)] = std::abs(rho.values(i, i));
  const auto [lo, hi] = support(mag, 1e-24);
  const double advance = chirp_frequency(axis, g.point(lo), g.point(hi), xgrid) * g.spacing();
  if (advance > kMaxAdvance) {
    fail(ErrorKind::Numerical, "under-resolved grid: chirp advances " + fmt(advance) + " rad per step");
  }

  const int count = hi - lo + 1;
  const CMatrix sub = rho.values.block(lo, lo, count, count);
  const double norm = 1.0 / (2.0 * kPi * std::abs(axis.nu));
  parallel_for(static_cast<std::size_t>(nx), [&](std::size_t j) {
    const double x = xgrid.point(static_cast<int>(j));
    CVector kern(count);
    for (int k = 0; k < count; ++k) {
      const double y = g.point(lo + k);
      kern(k) = g.weight(lo + k) * std::polar(1.0, axis.mu * y * y / (2.0 * axis.nu) - y * x / axis.nu);
    }
    const CVector right = sub * kern.conjugate();
    w[j] = norm * kern.cwiseProduct(right).sum().real();
  });
  return w;
}

WignerGrid wigner_from_density(const DensityGrid& rho, const Grid1D& pgrid) {
  const Grid1D& g = rho.grid;
  const int n = g.size();
  if (rho.values.rows() != n || rho.values.cols() != n) {
    fail(ErrorKind::Validation, "density samples do not match the grid");
  }
  if (rho.hermiticity() > 1e-10 * std::max(1.0, max_abs(rho.values))) {
    fail(ErrorKind::Validation, "density grid not Hermitian");
  }
  const double h = g.spacing();
  if (pgrid.max_abs() * 2.0 * h >= kPi) {
    fail(ErrorKind::Numerical, "grid too coarse for requested p-range (|p| must stay below " +
                                   fmt(kPi / (2.0 * h)) + ")");
  }

  WignerGrid out;
  out.qgrid = Grid1D(g.min(), g.max(), 2 * n - 1);
  out.pgrid = pgrid;
  const int np = pgrid.size();
  out.values = RMatrix::Zero(out.qgrid.size(), np);
  std::vector<double> imag(static_cast<std::size_t>(out.qgrid.size()), 0.0);

  parallel_for(static_cast<std::size_t>(out.qgrid.size()), [&](std::size_t si) {
    const int s = static_cast<int>(si);
    const int i0 = std::max(0, s - (n - 1));
    const int i1 = std::min(s, n - 1);
    for (int k = 0; k < np; ++k) {
      const double p = pgrid.point(k);
      // Sum over u = (2i - s) h of rho(i, s - i) e^{-i p u}, Horner in z = e^{-2iph}.
      const Complex z = std::polar(1.0, -2.0 * p * h);
      Complex acc{};
      for (int i = i1; i >= i0; --i) acc = acc * z + rho.values(i, s - i);
      acc *= std::polar(2.0 * h, -p * (2 * i0 - s) * h);
      out.values(s, k) = acc.real();
      imag[si] = std::max(imag[si], std::abs(acc.imag()));
    }
  });
  out.imag_residual = *std::max_element(imag.begin(), imag.end());
  return out;
}

DensityGrid density_from_wigner(const WignerGrid& w) {
  const int nq = w.qgrid.size();
  if (nq % 2 == 0 || (nq + 1) / 2 < 8) {
    fail(ErrorKind::Validation, "grid mismatch: Wigner q grid is not a half-step lattice");
  }
  if (w.values.rows() != nq || w.values.cols() != w.pgrid.size()) {
    fail(ErrorKind::Validation, "grid mismatch: Wigner samples do not match their grids");
  }
  const int n = (nq + 1) / 2;
  DensityGrid out{Grid1D(w.qgrid.min(), w.qgrid.max(), n), CMatrix::Zero(n, n)};
  const double h = out.grid.spacing();
  const int np = w.pgrid.size();
  const double dp = w.pgrid.spacing();
  const double pmin = w.pgrid.min();

  parallel_for(static_cast<std::size_t>(n), [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    for (int l = 0; l <= i; ++l) {
      const double u = (i - l) * h;
      const Complex z = std::polar(1.0, dp * u);
      Complex acc{};
      for (int k = np - 1; k >= 0; --k) acc = acc * z + w.pgrid.weight(k) * w.values(i + l, k);
      acc *= std::polar(1.0 / (2.0 * kPi), pmin * u);
      out.values(i, l) = acc;
    }
  });
  for (int i = 0; i < n; ++i) {
    for (int l = i + 1; l < n; ++l) out.values(i, l) = std::conj(out.values(l, i));
  }
  return out;
}

std::vector<double> tomogram_from_wigner(const WignerGrid& w, const TomographyAxis& axis_in, const Grid1D& xgrid) {
  const TomographyAxis axis = TomographyAxis::make(axis_in.mu, axis_in.nu);
  const Grid1D& qg = w.qgrid;
  const Grid1D& pg = w.pgrid;
  if (w.values.rows() != qg.size() || w.values.cols() != pg.size()) {
    fail(ErrorKind::Validation, "Wigner samples do not match their grids");
  }
  const double r = axis.radius();
  const double nq = axis.mu / r, np = axis.nu / r;  // unit normal
  const double tq = -np, tp = nq;                    // unit tangent
  const double ds = std::max(qg.spacing(), pg.spacing());
  const int nx = xgrid.size();
  std::vector<double> out(static_cast<std::size_t>(nx), 0.0);
  std::vector<double> leak(static_cast<std::size_t>(nx), 0.0);

  parallel_for(static_cast<std::size_t>(nx), [&](std::size_t j) {
    const double x = xgrid.point(static_cast<int>(j));
    const double bq = x / r * nq, bp = x / r * np;
    // Clip the line b + s t to the grid rectangle.
    double s0 = -1e300, s1 = 1e300;
    auto clip = [&](double b, double t, double lo, double hi) {
      if (std::abs(t) < 1e-15) {
        if (b < lo || b > hi) s0 = 1e300;
        return;
      }
      double a = (lo - b) / t, c = (hi - b) / t;
      if (a > c) std::swap(a, c);
      s0 = std::max(s0, a);
      s1 = std::min(s1, c);
    };
    clip(bq, tq, qg.min(), qg.max());
    clip(bp, tp, pg.min(), pg.max());
    if (!(s1 > s0)) return;
    const int count = std::max(2, static_cast<int>(std::ceil((s1 - s0) / ds)) + 1);
    const double step = (s1 - s0) / (count - 1);
    double acc = 0.0;
    for (int k = 0; k < count; ++k) {
      const double s = s0 + k * step;
      const double v = interpolate(w, bq + s * tq, bp + s * tp);
      acc += ((k == 0 || k == count - 1) ? 0.5 : 1.0) * v;
      if (k == 0 || k == count - 1) leak[j] = std::max(leak[j], std::abs(v) / (2.0 * kPi));
    }
    out[j] = acc * step / (2.0 * kPi * r);
  });
  const double worst = *std::max_element(leak.begin(), leak.end());
  if (worst > 1e-4) {
    fail(ErrorKind::Numerical, "insufficient grid support: W = " + fmt(worst * 2.0 * kPi) +
                                   " where the integration line leaves the grid");
  }
  return out;
}

WignerGrid wigner_from_tomogram(const TomogramTable& table, const Grid1D& qgrid, const Grid1D& pgrid) {
  const Grid1D& xg = table.xgrid;
  const Grid1D& mg = table.mugrid;
  const Grid1D& ng = table.nugrid;
  if (table.values.size() != static_cast<std::size_t>(xg.size()) * mg.size() * ng.size()) {
    fail(ErrorKind::Validation, "tomogram table size does not match its grids");
  }
  if (xg.spacing() > kMaxAdvance) {
    fail(ErrorKind::Numerical, "Nyquist violation: X step " + fmt(xg.spacing()) + " cannot resolve e^{iX}");
  }
  if (mg.spacing() * qgrid.max_abs() >= kPi || ng.spacing() * pgrid.max_abs() >= kPi) {
    fail(ErrorKind::Numerical, "Nyquist violation: (mu, nu) steps too coarse for the requested (q, p) range");
  }

  const int nm = mg.size(), nn = ng.size();
  // Characteristic function F(mu, nu) = Int w(X, mu, nu) e^{iX} dX.
  CMatrix f(nm, nn);
  parallel_for(static_cast<std::size_t>(nm), [&](std::size_t a) {
    const int ia = static_cast<int>(a);
    for (int b = 0; b < nn; ++b) {
      if (std::abs(mg.point(ia)) < 1e-14 && std::abs(ng.point(b)) < 1e-14) {
        f(ia, b) = 1.0;
        continue;
      }
      std::vector<Complex> terms(static_cast<std::size_t>(xg.size()));
      for (int k = 0; k < xg.size(); ++k) {
        terms[static_cast<std::size_t>(k)] = std::polar(xg.weight(k) * table.at(k, ia, b), xg.point(k));
      }
      f(ia, b) = pairwise_sum(std::span<const Complex>(terms));
    }
  });

  // Separable Fourier sums: G(mu, p) = sum_nu F e^{-i nu p}, W = sum_mu G e^{-i mu q} / 2pi.
  CMatrix enu(nn, pgrid.size());
  for (int b = 0; b < nn; ++b) {
    for (int k = 0; k < pgrid.size(); ++k) enu(b, k) = std::polar(ng.weight(b), -ng.point(b) * pgrid.point(k));
  }
  CMatrix emu(qgrid.size(), nm);
  for (int i = 0; i < qgrid.size(); ++i) {
    for (int a = 0; a < nm; ++a) emu(i, a) = std::polar(mg.weight(a), -mg.point(a) * qgrid.point(i));
  }
  const CMatrix wc = emu * (f * enu) / (2.0 * kPi);

  WignerGrid out;
  out.qgrid = qgrid;
  out.pgrid = pgrid;
  out.values = wc.real();
  out.imag_residual = max_abs(wc.imag());
  return out;
}

}  // namespace tomo
