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

#include <random>

#include "doctest.h"
#include "tomo/error.hpp"
#include "tomo/state_map.hpp"

#define CHECK_KIND(expr, k)                      \
  do {                                           \
    bool thrown_ = false;                        \
    try {                                        \
      (void)(expr);                              \
    } catch (const tomo::Error& e_) {            \
      thrown_ = true;                            \
      CHECK(e_.kind() == tomo::ErrorKind::k);    \
    }                                            \
    CHECK_MESSAGE(thrown_, "expected " #k);      \
  } while (0)

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(424242);
  return r;
}

inline double normal() { return std::normal_distribution<double>()(rng()); }

inline tomo::CVector random_vector(int n) {
  tomo::CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = {normal(), normal()};
  return v;
}

inline tomo::Spinor random_spinor(int n) { return tomo::Spinor{random_vector(n).normalized()}; }

inline tomo::CMatrix random_hermitian(int n) {
  tomo::CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.col(i) = random_vector(n);
  return (m + m.adjoint()) / 2.0;
}

inline tomo::DensityMatrix random_mixed(int n, int rank) {
  tomo::MixedEnsemble e;
  std::uniform_real_distribution<double> u(0.1, 1.0);
  double total = 0.0;
  for (int k = 0; k < rank; ++k) {
    e.weights.push_back(u(rng()));
    total += e.weights.back();
    e.states.push_back(random_spinor(n));
  }
  for (double& w : e.weights) w /= total;
  return tomo::mixed_density(e);
}

}  // namespace testing
