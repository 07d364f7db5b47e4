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

#include "tomo/parallel.hpp"
#include "tomo/wigner.hpp"

namespace tomo {

struct QuadratureNode {
  EulerAngles angles;
  double weight = 0.0;
};

// A direction on the sphere with its surface weight (weights sum to 4 pi).
struct SphereNode {
  double phi = 0.0;
  double theta = 0.0;
  double weight = 0.0;
};

// Product rule over SU(2)/SO(3) Euler angles: Gauss-Legendre in cos(theta)
// with L nodes and periodic trapezoid with 2L+1 nodes in phi and psi.
// Weights sum to 8 pi^2. Exact for cos(theta)-polynomials of degree <= 2L-1
// times trigonometric polynomials of degree <= 2L in phi and psi.
class QuadratureGrid {
 public:
  QuadratureGrid() = default;
  explicit QuadratureGrid(int band_limit);

  int band_limit() const { return band_limit_; }
  const std::vector<double>& cos_theta() const { return cos_theta_; }
  const std::vector<double>& theta_weights() const { return theta_weights_; }
  int phi_count() const { return 2 * band_limit_ + 1; }
  int psi_count() const { return 2 * band_limit_ + 1; }
  std::size_t size() const {
    return cos_theta_.size() * static_cast<std::size_t>(phi_count() * psi_count());
  }

  // Node order: theta outermost, then phi, then psi.
  std::vector<QuadratureNode> nodes() const;

  // The psi dimension folded out analytically; theta outermost, then phi.
  std::vector<SphereNode> sphere_nodes() const;

  double total_weight() const;

  // Integral of f(EulerAngles) over dw, summed pairwise in node order.
  template <typename F>
  auto integrate(F&& f) const {
    using R = decltype(f(EulerAngles{}));
    const auto all = nodes();
    std::vector<R> terms(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) terms[i] = all[i].weight * f(all[i].angles);
    return pairwise_sum(std::span<const R>(terms));
  }

 private:
  int band_limit_ = 0;
  std::vector<double> cos_theta_;
  std::vector<double> theta_weights_;
};

// Throws ErrorKind::Domain for band_limit < 1.
QuadratureGrid sphere_quadrature(int band_limit);

// n-point Gauss-Legendre nodes (ascending) and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace tomo
