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


#include "tomo/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>

#include "tomo/canonical.hpp"
#include "tomo/cv_tomography.hpp"
#include "tomo/oscillator.hpp"
#include "tomo/quadrature.hpp"
#include "tomo/spin_tomography.hpp"

namespace tomo {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  double normal() { return std::normal_distribution<double>()(rng_); }

  CMatrix hermitian(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) m(i, k) = Complex(normal(), normal());
    }
    return (m + m.adjoint()) / 2.0;
  }
  Spinor spinor(int n) {
    CVector a(n);
    for (int i = 0; i < n; ++i) a(i) = Complex(normal(), normal());
    return Spinor{a.normalized()};
  }
  RMatrix symmetric(int n, double scale) {
    RMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) m(i, k) = scale * normal();
    }
    return (m + m.transpose()) / 2.0;
  }

 private:
  std::mt19937_64 rng_;
};

CheckResult check(std::string name, double metric, double tol) {
  return CheckResult{std::move(name), metric <= tol, metric, tol};
}

CheckResult energies(Sampler& s) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double a = s.uniform(-10, 10), c = s.uniform(-10, 10);
    const Complex b(s.uniform(-10, 10), s.uniform(-10, 10));
    const auto e = two_level_energies(a, b, c);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(HermitianHamiltonian::two_level(a, b, c).entries);
    const auto ev = es.eigenvalues();
    worst = std::max({worst, std::abs(e.lower - ev(0)) / std::max(1.0, std::abs(ev(0))),
                      std::abs(e.upper - ev(1)) / std::max(1.0, std::abs(ev(1)))});
  }
  return check("two-level energies", worst, 1e-12);
}

void dynamics(Sampler& s, std::vector<CheckResult>& out) {
  double picture = 0.0, modes = 0.0;
  for (int k = 0; k < 10; ++k) {
    const int n = (k % 2 == 0) ? 2 : 4;
    const auto H = HermitianHamiltonian::make(s.hermitian(n));
    const Spinor psi = s.spinor(n);
    const FlowMatrix A = build_A(build_B(H));
    const PhaseSpacePoint q = evolve_classical(A, spinor_to_phase(psi), 1.0);
    const PhaseSpacePoint qq = spinor_to_phase(evolve_quantum(H, psi, 1.0));
    picture = std::max(picture, (q.coordinates() - qq.coordinates()).cwiseAbs().maxCoeff());
    auto freq = normal_mode_frequencies(A);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H.entries);
    std::vector<double> spec(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::vector<double> mag;
    for (double e : spec) mag.push_back(std::abs(e));
    std::sort(mag.begin(), mag.end());
    std::sort(freq.begin(), freq.end());
    for (int i = 0; i < n; ++i) modes = std::max(modes, std::abs(freq[static_cast<std::size_t>(i)] - mag[static_cast<std::size_t>(i)]));
  }
  out.push_back(check("picture equivalence", picture, 1e-9));
  out.push_back(check("normal modes match spectrum", modes, 1e-10));
}

void spin(Sampler& s, std::vector<CheckResult>& out) {
  double round = 0.0, norm = 0.0, neg = 0.0;
  for (int twice = 1; twice <= 4; ++twice) {
    const int d = twice + 1;
    const QuadratureGrid grid = sphere_quadrature(d);
    for (int k = 0; k < 5; ++k) {
      MixedEnsemble e;
      for (int r = 0; r < 3; ++r) {
        e.weights.push_back(1.0 / 3.0);
        e.states.push_back(s.spinor(d));
      }
      const DensityMatrix rho = (k % 2 == 0) ? pure_density(s.spinor(d), false) : mixed_density(e);
      const SpinTomogram tom = tomogram(rho, grid);
      round = std::max(round, max_abs(reconstruct(tom).rho.entries - rho.entries));
      for (std::size_t n = 0; n < tom.directions.size(); ++n) {
        double sum = 0.0;
        for (int m = 0; m < d; ++m) {
          const double w = tom.values[n * static_cast<std::size_t>(d) + static_cast<std::size_t>(m)];
          sum += w;
          neg = std::max(neg, -w);
        }
        norm = std::max(norm, std::abs(sum - 1.0));
      }
    }
  }
  out.push_back(check("spin tomogram round trip", round, 1e-8));
  out.push_back(check("spin tomogram normalization", norm, 1e-12));
  out.push_back(check("spin tomogram positivity", neg, 1e-12));
}

void bogolyubov(Sampler& s, std::vector<CheckResult>& out) {
  double diagram = 0.0, density = 0.0;
  for (int k = 0; k < 10; ++k) {
    const int n = 1 + k % 3;
    const SymplecticMatrix lambda = validate_symplectic(symplectic_from_generator(s.symmetric(2 * n, 0.3)));
    const BogolyubovPair uv = uv_from_symplectic(lambda);
    const Spinor psi = s.spinor(n);
    const Spinor moved = transform_spinor(uv, psi);
    const RVector q = lambda.matrix() * spinor_to_phase(psi).coordinates();
    diagram = std::max(diagram, (phase_to_spinor(PhaseSpacePoint(q)).amplitudes - moved.amplitudes).cwiseAbs().maxCoeff());
    const CMatrix rho = transform_density(uv, pure_density(psi, false), conjugate_moment(psi));
    density = std::max(density, max_abs(rho - moved.amplitudes * moved.amplitudes.adjoint()));
  }
  out.push_back(check("Bogolyubov commuting diagram", diagram, 1e-11));
  out.push_back(check("Bogolyubov density transform", density, 1e-10));
}

void continuous(std::vector<CheckResult>& out) {
  const Grid1D y(-8, 8, 256);
  const Grid1D x(-8, 8, 256);
  const WaveFunction1D ground = hermite_function(0, y);
  double gauss = 0.0;
  for (auto [mu, nu] : {std::pair{1.0, 0.0}, std::pair{0.6, 0.8}, std::pair{-1.2, 1.5}}) {
    const TomographyAxis axis = TomographyAxis::make(mu, nu);
    const auto w = tomogram_wavefunction(ground, axis, x);
    for (int i = 0; i < x.size(); ++i) {
      gauss = std::max(gauss, std::abs(w[static_cast<std::size_t>(i)] - coherent_tomogram(x.point(i), axis)));
    }
  }
  out.push_back(check("ground-state tomogram", gauss, 1e-6));

  const Grid1D p(-6, 6, 129);
  const DensityGrid excited = DensityGrid::from_wavefunction(hermite_function(1, y));
  const WignerGrid w = wigner_from_density(excited, p);
  out.push_back(check("first excited W(0,0) = -2", std::abs(w.values(y.size() - 1, 64) + 2.0), 1e-5));
  out.push_back(check("Wigner round trip", max_abs(density_from_wigner(w).values - excited.values), 1e-7));
}

}  // namespace

std::vector<CheckResult> run_self_checks(std::uint64_t seed) {
  Sampler s(seed);
  std::vector<CheckResult> out;
  out.push_back(energies(s));
  dynamics(s, out);
  spin(s, out);
  bogolyubov(s, out);
  continuous(out);
  return out;
}

}  // namespace tomo
