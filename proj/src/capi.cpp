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


#include <Eigen/Eigenvalues>
#include <cstring>
#include <new>
#include <string>

#include "tomo/canonical.hpp"
#include "tomo/cv_tomography.hpp"
#include "tomo/oscillator.hpp"
#include "tomo/quadrature.hpp"
#include "tomo/scenario.hpp"
#include "tomo/spin_tomography.hpp"
#include "tomo/tomo.h"

struct tomo_density {
  tomo::DensityMatrix rho;
};

struct tomo_tomogram {
  tomo::SpinTomogram tom;
};

struct tomo_scenario {
  tomo::Scenario scenario;
};

namespace {

thread_local std::string last_error;

tomo_status record(tomo_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
tomo_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return TOMO_OK;
  } catch (const tomo::Error& e) {
    return record(static_cast<tomo_status>(static_cast<int>(e.kind())), e.what());
  } catch (const std::bad_alloc&) {
    return record(TOMO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(TOMO_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(TOMO_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) tomo::fail(tomo::ErrorKind::Domain, std::string("null argument: ") + name);
}

void need_size(std::size_t n, const char* name) {
  if (n == 0) tomo::fail(tomo::ErrorKind::Domain, std::string("zero size: ") + name);
}

tomo::Complex from_c(tomo_complex c) { return {c.re, c.im}; }
tomo_complex to_c(tomo::Complex c) { return {c.real(), c.imag()}; }

tomo::CVector read_vector(std::size_t n, const tomo_complex* p) {
  tomo::CVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = from_c(p[i]);
  return v;
}

void write_vector(const tomo::CVector& v, tomo_complex* p) {
  for (Eigen::Index i = 0; i < v.size(); ++i) p[i] = to_c(v(i));
}

tomo::CMatrix read_matrix(std::size_t n, const tomo_complex* p) {
  tomo::CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = from_c(p[r * n + c]);
  }
  return m;
}

void write_matrix(const tomo::CMatrix& m, tomo_complex* p) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) p[r * m.cols() + c] = to_c(m(r, c));
  }
}

tomo::RMatrix read_real(std::size_t n, const double* p) {
  tomo::RMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = p[r * n + c];
  }
  return m;
}

tomo::RVector read_real_vector(std::size_t n, const double* p) {
  return Eigen::Map<const tomo::RVector>(p, static_cast<Eigen::Index>(n));
}

tomo::HalfInt half(int twice) { return tomo::HalfInt::from_twice(twice); }

tomo::WaveFunction1D wave(std::size_t n, double ymin, double ymax, const tomo_complex* psi) {
  need(psi, "psi");
  tomo::WaveFunction1D w{tomo::Grid1D(ymin, ymax, static_cast<int>(n)), read_vector(n, psi)};
  return w;
}

}  // namespace

extern "C" {

const char* tomo_version(void) { return "1.0.0"; }

const char* tomo_last_error(void) { return last_error.c_str(); }

int tomo_exit_code(tomo_status status) {
  if (status == TOMO_OK) return 0;
  if (status == TOMO_ERR_DOMAIN) return 3;
  return static_cast<int>(status);
}

tomo_status tomo_small_d(int twice_j, int twice_m1, int twice_m2, double theta, double* out) {
  return guard([&] {
    need(out, "out");
    *out = tomo::small_d(half(twice_j), half(twice_m1), half(twice_m2), theta);
  });
}

tomo_status tomo_wigner_D(int twice_j, int twice_m1, int twice_m2, double phi, double theta, double psi,
                          tomo_complex* out) {
  return guard([&] {
    need(out, "out");
    *out = to_c(tomo::wigner_D(half(twice_j), half(twice_m1), half(twice_m2), tomo::EulerAngles::make(phi, theta, psi)));
  });
}

tomo_status tomo_three_j(int twice_j1, int twice_j2, int twice_j3, int twice_m1, int twice_m2, int twice_m3,
                         double* out) {
  return guard([&] {
    need(out, "out");
    *out = tomo::three_j(half(twice_j1), half(twice_j2), half(twice_j3), half(twice_m1), half(twice_m2), half(twice_m3));
  });
}

tomo_status tomo_sphere_nodes(int band_limit, double* phi, double* theta, double* weight, size_t capacity,
                              size_t* count) {
  return guard([&] {
    need(count, "count");
    const auto nodes = tomo::sphere_quadrature(band_limit).sphere_nodes();
    *count = nodes.size();
    if (phi == nullptr && theta == nullptr && weight == nullptr) return;
    need(phi, "phi");
    need(theta, "theta");
    need(weight, "weight");
    if (capacity < nodes.size()) tomo::fail(tomo::ErrorKind::Domain, "capacity below node count");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      phi[i] = nodes[i].phi;
      theta[i] = nodes[i].theta;
      weight[i] = nodes[i].weight;
    }
  });
}

tomo_status tomo_phase_to_spinor(size_t modes, const double* q, tomo_complex* psi) {
  return guard([&] {
    need(q, "q");
    need(psi, "psi");
    need_size(modes, "modes");
    write_vector(tomo::phase_to_spinor(tomo::PhaseSpacePoint(read_real_vector(2 * modes, q))).amplitudes, psi);
  });
}

tomo_status tomo_spinor_to_phase(size_t modes, const tomo_complex* psi, double* q) {
  return guard([&] {
    need(q, "q");
    need(psi, "psi");
    need_size(modes, "modes");
    const tomo::RVector c = tomo::spinor_to_phase(tomo::Spinor{read_vector(modes, psi)}).coordinates();
    for (Eigen::Index i = 0; i < c.size(); ++i) q[i] = c(i);
  });
}

tomo_status tomo_density_pure(size_t dim, const tomo_complex* psi, int normalize, tomo_density** out) {
  return guard([&] {
    need(psi, "psi");
    need(out, "out");
    need_size(dim, "dim");
    *out = new tomo_density{tomo::pure_density(tomo::Spinor{read_vector(dim, psi)}, normalize != 0)};
  });
}

tomo_status tomo_density_mixed(size_t dim, size_t count, const double* weights, const tomo_complex* spinors,
                               tomo_density** out) {
  return guard([&] {
    need(weights, "weights");
    need(spinors, "spinors");
    need(out, "out");
    need_size(dim, "dim");
    need_size(count, "count");
    tomo::MixedEnsemble e;
    for (std::size_t k = 0; k < count; ++k) {
      e.weights.push_back(weights[k]);
      e.states.push_back(tomo::Spinor{read_vector(dim, spinors + k * dim)});
    }
    *out = new tomo_density{tomo::mixed_density(e)};
  });
}

tomo_status tomo_density_from_matrix(size_t dim, const tomo_complex* entries, tomo_density** out) {
  return guard([&] {
    need(entries, "entries");
    need(out, "out");
    need_size(dim, "dim");
    tomo::DensityMatrix rho{read_matrix(dim, entries)};
    tomo::validate_density(rho, 1e-9);
    *out = new tomo_density{rho};
  });
}

size_t tomo_density_dim(const tomo_density* rho) { return rho ? static_cast<size_t>(rho->rho.size()) : 0; }

tomo_status tomo_density_entries(const tomo_density* rho, tomo_complex* entries) {
  return guard([&] {
    need(rho, "rho");
    need(entries, "entries");
    write_matrix(rho->rho.entries, entries);
  });
}

void tomo_density_free(tomo_density* rho) { delete rho; }

tomo_status tomo_tomogram_compute(const tomo_density* rho, int band_limit, tomo_tomogram** out) {
  return guard([&] {
    need(rho, "rho");
    need(out, "out");
    const int l = band_limit > 0 ? band_limit : rho->rho.spin().twice() + 1;
    *out = new tomo_tomogram{tomo::tomogram(rho->rho, tomo::sphere_quadrature(l))};
  });
}

int tomo_tomogram_twice_j(const tomo_tomogram* tom) { return tom ? tom->tom.spin.twice() : -1; }

size_t tomo_tomogram_directions(const tomo_tomogram* tom) { return tom ? tom->tom.directions.size() : 0; }

tomo_status tomo_tomogram_direction(const tomo_tomogram* tom, size_t index, double* phi, double* theta,
                                    double* weight) {
  return guard([&] {
    need(tom, "tom");
    if (index >= tom->tom.directions.size()) tomo::fail(tomo::ErrorKind::Domain, "direction index out of range");
    if (phi) *phi = tom->tom.directions[index].phi;
    if (theta) *theta = tom->tom.directions[index].theta;
    if (weight) *weight = tom->tom.weights.empty() ? 0.0 : tom->tom.weights[index];
  });
}

tomo_status tomo_tomogram_value(const tomo_tomogram* tom, size_t direction, int twice_m, double* out) {
  return guard([&] {
    need(tom, "tom");
    need(out, "out");
    if (direction >= tom->tom.directions.size()) tomo::fail(tomo::ErrorKind::Domain, "direction index out of range");
    const auto am = tomo::AngularMomentum::make(tom->tom.spin, half(twice_m));
    *out = tom->tom.value(direction, am.m);
  });
}

tomo_status tomo_tomogram_reconstruct(const tomo_tomogram* tom, tomo_density** out) {
  return guard([&] {
    need(tom, "tom");
    need(out, "out");
    *out = new tomo_density{tomo::reconstruct(tom->tom).rho};
  });
}

void tomo_tomogram_free(tomo_tomogram* tom) { delete tom; }

tomo_status tomo_two_level_energies(double a, tomo_complex b, double c, double* upper, double* lower) {
  return guard([&] {
    need(upper, "upper");
    need(lower, "lower");
    const auto e = tomo::two_level_energies(a, from_c(b), c);
    *upper = e.upper;
    *lower = e.lower;
  });
}

tomo_status tomo_evolve_quantum(size_t n, const tomo_complex* h, const tomo_complex* psi0, double t,
                                tomo_complex* psi) {
  return guard([&] {
    need(h, "h");
    need(psi0, "psi0");
    need(psi, "psi");
    need_size(n, "n");
    const auto H = tomo::HermitianHamiltonian::make(read_matrix(n, h));
    write_vector(tomo::evolve_quantum(H, tomo::Spinor{read_vector(n, psi0)}, t).amplitudes, psi);
  });
}

tomo_status tomo_evolve_classical(size_t n, const tomo_complex* h, const double* q0, double t, double* q) {
  return guard([&] {
    need(h, "h");
    need(q0, "q0");
    need(q, "q");
    need_size(n, "n");
    const auto A = tomo::build_A(tomo::build_B(tomo::HermitianHamiltonian::make(read_matrix(n, h))));
    const tomo::RVector c =
        tomo::evolve_classical(A, tomo::PhaseSpacePoint(read_real_vector(2 * n, q0)), t).coordinates();
    for (Eigen::Index i = 0; i < c.size(); ++i) q[i] = c(i);
  });
}

tomo_status tomo_normal_modes(size_t n, const tomo_complex* h, double* frequencies) {
  return guard([&] {
    need(h, "h");
    need(frequencies, "frequencies");
    need_size(n, "n");
    const auto A = tomo::build_A(tomo::build_B(tomo::HermitianHamiltonian::make(read_matrix(n, h))));
    const auto f = tomo::normal_mode_frequencies(A);
    std::copy(f.begin(), f.end(), frequencies);
  });
}

tomo_status tomo_symplectic_residual(size_t modes, const double* lambda, double* out) {
  return guard([&] {
    need(lambda, "lambda");
    need(out, "out");
    need_size(modes, "modes");
    *out = tomo::symplectic_residual(read_real(2 * modes, lambda));
  });
}

tomo_status tomo_bogolyubov_from_symplectic(size_t modes, const double* lambda, tomo_complex* u, tomo_complex* v) {
  return guard([&] {
    need(lambda, "lambda");
    need(u, "u");
    need(v, "v");
    need_size(modes, "modes");
    const auto uv = tomo::uv_from_symplectic(tomo::validate_symplectic(read_real(2 * modes, lambda)));
    write_matrix(uv.u, u);
    write_matrix(uv.v, v);
  });
}

tomo_status tomo_transform_spinor(size_t modes, const double* lambda, const tomo_complex* psi, tomo_complex* out) {
  return guard([&] {
    need(lambda, "lambda");
    need(psi, "psi");
    need(out, "out");
    need_size(modes, "modes");
    const auto uv = tomo::uv_from_symplectic(tomo::validate_symplectic(read_real(2 * modes, lambda)));
    write_vector(tomo::transform_spinor(uv, tomo::Spinor{read_vector(modes, psi)}).amplitudes, out);
  });
}

tomo_status tomo_cv_tomogram(size_t n, double ymin, double ymax, const tomo_complex* psi, double mu, double nu,
                             size_t nx, double xmin, double xmax, double* w) {
  return guard([&] {
    need(w, "w");
    const auto values = tomo::tomogram_wavefunction(wave(n, ymin, ymax, psi), tomo::TomographyAxis::make(mu, nu),
                                                    tomo::Grid1D(xmin, xmax, static_cast<int>(nx)));
    std::copy(values.begin(), values.end(), w);
  });
}

tomo_status tomo_cv_wigner(size_t n, double ymin, double ymax, const tomo_complex* psi, size_t np, double pmin,
                           double pmax, double* wigner) {
  return guard([&] {
    need(wigner, "wigner");
    const auto rho = tomo::DensityGrid::from_wavefunction(wave(n, ymin, ymax, psi));
    const auto W = tomo::wigner_from_density(rho, tomo::Grid1D(pmin, pmax, static_cast<int>(np)));
    for (Eigen::Index i = 0; i < W.values.rows(); ++i) {
      for (Eigen::Index k = 0; k < W.values.cols(); ++k) wigner[i * W.values.cols() + k] = W.values(i, k);
    }
  });
}

tomo_status tomo_scenario_load(const char* path, tomo_scenario** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new tomo_scenario{tomo::Scenario::load(path)};
  });
}

const char* tomo_scenario_kind(const tomo_scenario* s) { return s ? s->scenario.kind().c_str() : ""; }

tomo_status tomo_scenario_set(tomo_scenario* s, const char* key, const char* value) {
  return guard([&] {
    need(s, "scenario");
    need(key, "key");
    need(value, "value");
    s->scenario.set(key, value);
  });
}

tomo_status tomo_scenario_set_output(tomo_scenario* s, const char* path, const char* format) {
  return guard([&] {
    need(s, "scenario");
    s->scenario.set_output(path ? path : "", format ? format : "");
  });
}

tomo_status tomo_scenario_execute(const tomo_scenario* s, int* exit_code, char* summary, size_t capacity) {
  return guard([&] {
    need(s, "scenario");
    const auto outcome = s->scenario.execute();
    if (exit_code) *exit_code = outcome.status;
    if (summary && capacity > 0) {
      const std::size_t len = std::min(capacity - 1, outcome.summary.size());
      std::memcpy(summary, outcome.summary.data(), len);
      summary[len] = '\0';
    }
  });
}

void tomo_scenario_free(tomo_scenario* s) { delete s; }

}  // extern "C"
