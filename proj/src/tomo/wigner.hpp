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

#include <compare>
#include <vector>

#include "tomo/types.hpp"

namespace tomo {

// A value in (1/2)Z, stored as twice its value so arithmetic stays exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  // Throws ErrorKind::Domain unless v is an exact multiple of 1/2.
  static HalfInt from_double(double v);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  int twice_ = 0;
};

// (j, m) with 2j >= 0, |m| <= j and j - m integral.
struct AngularMomentum {
  HalfInt j;
  HalfInt m;

  static bool valid(HalfInt j, HalfInt m);
  // Throws ErrorKind::Domain for invalid pairs.
  static AngularMomentum make(HalfInt j, HalfInt m);
};

// Dimension 2j+1 of the spin-j irrep.
inline int spin_dimension(HalfInt j) { return j.twice() + 1; }

// Basis ordering is m = +j, j-1, ..., -j.
inline int basis_index(HalfInt j, HalfInt m) { return (j.twice() - m.twice()) / 2; }
inline HalfInt basis_projection(HalfInt j, int index) {
  return HalfInt::from_twice(j.twice() - 2 * index);
}

// Spin j with 2j+1 == dimension.
HalfInt spin_from_dimension(int dimension);

// z-y-z Euler angles, normalized to phi, psi in [0, 2pi) and theta in [0, pi].
// Normalization may flip the SU(2) sign of half-integer representations; it
// never changes the SO(3) rotation.
struct EulerAngles {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;

  static EulerAngles make(double phi, double theta, double psi);
};

// d^j_{m1 m2}(theta) for the rotation exp(-i theta J_y), theta in [0, pi].
double small_d(HalfInt j, HalfInt m1, HalfInt m2, double theta);

// Full (2j+1)x(2j+1) small-d matrix in the m = +j..-j ordering.
RMatrix small_d_matrix(HalfInt j, double theta);

// D^j_{m1 m2} = <j m1| exp(-i phi J_z) exp(-i theta J_y) exp(-i psi J_z) |j m2>
//            = exp(-i m1 phi) d^j_{m1 m2}(theta) exp(-i m2 psi).
Complex wigner_D(HalfInt j, HalfInt m1, HalfInt m2, const EulerAngles& angles);
CMatrix wigner_D_matrix(HalfInt j, const EulerAngles& angles);

// Wigner 3j symbol. Exactly 0 when the m-sum or the triangle rule fails.
double three_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

namespace detail {

// Direct factorial sum; accurate for moderate j only.
double small_d_series(HalfInt j, HalfInt m1, HalfInt m2, double theta);

// Column m2 of the small-d matrix (rows m1 = +j..-j) by the three-term
// recurrence in m1, run inward from both edges.
std::vector<double> small_d_column_recurrence(HalfInt j, HalfInt m2, double theta);

// Racah sum in exact integer arithmetic (prime-factorized factorials).
double three_j_exact(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

// Racah sum with log-factorials in floating point.
double three_j_float(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

}  // namespace detail

}  // namespace tomo
