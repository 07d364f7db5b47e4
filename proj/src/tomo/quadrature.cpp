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

#include "tomo/quadrature.hpp"

#include <cmath>

#include "tomo/error.hpp"

namespace tomo {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      // p1 = P_n(x), p0 = P_{n-1}(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

QuadratureGrid::QuadratureGrid(int band_limit) : band_limit_(band_limit) {
  gauss_legendre(band_limit, cos_theta_, theta_weights_);
}

std::vector<QuadratureNode> QuadratureGrid::nodes() const {
  std::vector<QuadratureNode> out;
  out.reserve(size());
  const int nphi = phi_count(), npsi = psi_count();
  const double dphi = 2.0 * kPi / nphi, dpsi = 2.0 * kPi / npsi;
  for (std::size_t t = 0; t < cos_theta_.size(); ++t) {
    const double theta = std::acos(cos_theta_[t]);
    for (int a = 0; a < nphi; ++a) {
      for (int b = 0; b < npsi; ++b) {
        out.push_back({EulerAngles{a * dphi, theta, b * dpsi}, theta_weights_[t] * dphi * dpsi});
      }
    }
  }
  return out;
}

std::vector<SphereNode> QuadratureGrid::sphere_nodes() const {
  std::vector<SphereNode> out;
  const int nphi = phi_count();
  const double dphi = 2.0 * kPi / nphi;
  out.reserve(cos_theta_.size() * static_cast<std::size_t>(nphi));
  for (std::size_t t = 0; t < cos_theta_.size(); ++t) {
    const double theta = std::acos(cos_theta_[t]);
    for (int a = 0; a < nphi; ++a) out.push_back({a * dphi, theta, theta_weights_[t] * dphi});
  }
  return out;
}

double QuadratureGrid::total_weight() const {
  std::vector<double> w;
  for (const auto& n : nodes()) w.push_back(n.weight);
  return pairwise_sum(w);
}

QuadratureGrid sphere_quadrature(int band_limit) {
  if (band_limit < 1) fail(ErrorKind::Domain, "band_limit must be >= 1");
  return QuadratureGrid(band_limit);
}

}  // namespace tomo
