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


/* C interface to the tomo library.
 *
 * Every fallible call returns a tomo_status; on failure tomo_last_error()
 * describes the problem (thread-local, valid until the next call on the same
 * thread). Objects are opaque handles released with their *_free function.
 * Spin quantum numbers are passed doubled (twice_j = 2j) so that half-integers
 * stay exact. Complex matrices are row-major; phase-space points are stored as
 * (p_1..p_N, x_1..x_N).
 */
#ifndef TOMO_TOMO_H
#define TOMO_TOMO_H

#include <stddef.h>

#if defined(TOMO_BUILDING_LIBRARY)
#define TOMO_API __attribute__((visibility("default")))
#else
#define TOMO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tomo_status {
  TOMO_OK = 0,
  TOMO_ERR_DOMAIN = 1,     /* argument outside the mathematical domain */
  TOMO_ERR_PARSE = 2,      /* malformed scenario or data file */
  TOMO_ERR_VALIDATION = 3, /* physically invalid input */
  TOMO_ERR_NUMERICAL = 4,  /* numerical precondition not met */
  TOMO_ERR_INTERNAL = 5
} tomo_status;

typedef struct tomo_complex {
  double re;
  double im;
} tomo_complex;

typedef struct tomo_density tomo_density;
typedef struct tomo_tomogram tomo_tomogram;
typedef struct tomo_scenario tomo_scenario;

TOMO_API const char* tomo_version(void);
TOMO_API const char* tomo_last_error(void);
/* Process exit code for a status: 0, 2, 3, 4 or 5. */
TOMO_API int tomo_exit_code(tomo_status status);

/* ---- rotation-group algebra ---- */

TOMO_API tomo_status tomo_small_d(int twice_j, int twice_m1, int twice_m2, double theta, double* out);
TOMO_API tomo_status tomo_wigner_D(int twice_j, int twice_m1, int twice_m2, double phi, double theta, double psi,
                                   tomo_complex* out);
TOMO_API tomo_status tomo_three_j(int twice_j1, int twice_j2, int twice_j3, int twice_m1, int twice_m2, int twice_m3,
                                  double* out);
/* Sphere nodes of the quadrature with the given band limit. Pass NULL arrays
 * to query the count only. */
TOMO_API tomo_status tomo_sphere_nodes(int band_limit, double* phi, double* theta, double* weight, size_t capacity,
                                       size_t* count);

/* ---- classical <-> quantum state map ---- */

TOMO_API tomo_status tomo_phase_to_spinor(size_t modes, const double* q, tomo_complex* psi);
TOMO_API tomo_status tomo_spinor_to_phase(size_t modes, const tomo_complex* psi, double* q);

/* ---- density matrices ---- */

TOMO_API tomo_status tomo_density_pure(size_t dim, const tomo_complex* psi, int normalize, tomo_density** out);
/* spinors holds count consecutive vectors of length dim. */
TOMO_API tomo_status tomo_density_mixed(size_t dim, size_t count, const double* weights, const tomo_complex* spinors,
                                        tomo_density** out);
TOMO_API tomo_status tomo_density_from_matrix(size_t dim, const tomo_complex* entries, tomo_density** out);
TOMO_API size_t tomo_density_dim(const tomo_density* rho);
TOMO_API tomo_status tomo_density_entries(const tomo_density* rho, tomo_complex* entries);
TOMO_API void tomo_density_free(tomo_density* rho);

/* ---- spin tomography ---- */

/* band_limit <= 0 selects 2j + 1. */
TOMO_API tomo_status tomo_tomogram_compute(const tomo_density* rho, int band_limit, tomo_tomogram** out);
TOMO_API int tomo_tomogram_twice_j(const tomo_tomogram* tom);
TOMO_API size_t tomo_tomogram_directions(const tomo_tomogram* tom);
TOMO_API tomo_status tomo_tomogram_direction(const tomo_tomogram* tom, size_t index, double* phi, double* theta,
                                             double* weight);
TOMO_API tomo_status tomo_tomogram_value(const tomo_tomogram* tom, size_t direction, int twice_m, double* out);
TOMO_API tomo_status tomo_tomogram_reconstruct(const tomo_tomogram* tom, tomo_density** out);
TOMO_API void tomo_tomogram_free(tomo_tomogram* tom);

/* ---- linear dynamics ---- */

TOMO_API tomo_status tomo_two_level_energies(double a, tomo_complex b, double c, double* upper, double* lower);
/* h is an n x n Hermitian matrix. */
TOMO_API tomo_status tomo_evolve_quantum(size_t n, const tomo_complex* h, const tomo_complex* psi0, double t,
                                         tomo_complex* psi);
TOMO_API tomo_status tomo_evolve_classical(size_t n, const tomo_complex* h, const double* q0, double t, double* q);
/* n frequencies in ascending order. */
TOMO_API tomo_status tomo_normal_modes(size_t n, const tomo_complex* h, double* frequencies);

/* ---- linear canonical transformations ---- */

/* lambda is 2N x 2N, row-major. */
TOMO_API tomo_status tomo_symplectic_residual(size_t modes, const double* lambda, double* out);
TOMO_API tomo_status tomo_bogolyubov_from_symplectic(size_t modes, const double* lambda, tomo_complex* u,
                                                     tomo_complex* v);
TOMO_API tomo_status tomo_transform_spinor(size_t modes, const double* lambda, const tomo_complex* psi,
                                           tomo_complex* out);

/* ---- continuous-variable tomography ---- */

/* psi sampled on n points of [ymin, ymax]; w receives nx values on [xmin, xmax]. */
TOMO_API tomo_status tomo_cv_tomogram(size_t n, double ymin, double ymax, const tomo_complex* psi, double mu,
                                      double nu, size_t nx, double xmin, double xmax, double* w);
/* W is (2n - 1) x np, row-major, on the half-step q lattice of [ymin, ymax]. */
TOMO_API tomo_status tomo_cv_wigner(size_t n, double ymin, double ymax, const tomo_complex* psi, size_t np,
                                    double pmin, double pmax, double* wigner);

/* ---- scenarios ---- */

TOMO_API tomo_status tomo_scenario_load(const char* path, tomo_scenario** out);
TOMO_API const char* tomo_scenario_kind(const tomo_scenario* s);
TOMO_API tomo_status tomo_scenario_set(tomo_scenario* s, const char* key, const char* value);
/* NULL or empty arguments keep the current value. */
TOMO_API tomo_status tomo_scenario_set_output(tomo_scenario* s, const char* path, const char* format);
/* Writes the outputs; exit_code receives the process exit code (nonzero when a
 * verify suite fails). The one-line summary is truncated to capacity. */
TOMO_API tomo_status tomo_scenario_execute(const tomo_scenario* s, int* exit_code, char* summary, size_t capacity);
TOMO_API void tomo_scenario_free(tomo_scenario* s);

#ifdef __cplusplus
}
#endif

#endif /* TOMO_TOMO_H */
