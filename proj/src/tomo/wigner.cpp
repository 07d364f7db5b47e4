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

#include "tomo/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "tomo/error.hpp"

namespace tomo {

namespace {

constexpr int kSeriesMaxTwiceJ = 20;    // direct factorial sum up to j = 10
constexpr int kExact3jMaxTwiceJ = 40;   // exact Racah sum up to 2j = 40

std::string half_str(HalfInt h) {
  return h.is_integer() ? std::to_string(h.twice() / 2) : std::to_string(h.twice()) + "/2";
}

// Converts a twice-value known to be even into the integer it represents.
int whole(int twice) { return twice / 2; }

const std::array<double, 171>& factorial_table() {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  return table;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double check_theta(double theta) {
  constexpr double kSlack = 1e-12;
  if (!std::isfinite(theta) || theta < -kSlack || theta > kPi + kSlack) {
    fail(ErrorKind::Domain, "theta must lie in [0, pi], got " + std::to_string(theta));
  }
  return std::clamp(theta, 0.0, kPi);
}

void require_valid(HalfInt j, HalfInt m) {
  if (!AngularMomentum::valid(j, m)) {
    fail(ErrorKind::Domain, "invalid angular momentum (j=" + half_str(j) + ", m=" + half_str(m) + ")");
  }
}

}  // namespace

HalfInt HalfInt::from_double(double v) {
  const double twice = 2.0 * v;
  if (!std::isfinite(v) || std::abs(twice - std::round(twice)) > 1e-9 || std::abs(twice) > 1e6) {
    fail(ErrorKind::Domain, "value " + std::to_string(v) + " is not a half-integer");
  }
  return from_twice(static_cast<int>(std::lround(twice)));
}

bool AngularMomentum::valid(HalfInt j, HalfInt m) {
  return j.twice() >= 0 && std::abs(m.twice()) <= j.twice() && (j.twice() - m.twice()) % 2 == 0;
}

AngularMomentum AngularMomentum::make(HalfInt j, HalfInt m) {
  require_valid(j, m);
  return {j, m};
}

HalfInt spin_from_dimension(int dimension) {
  if (dimension < 1) fail(ErrorKind::Domain, "spin dimension must be >= 1");
  return HalfInt::from_twice(dimension - 1);
}

EulerAngles EulerAngles::make(double phi, double theta, double psi) {
  if (!std::isfinite(phi) || !std::isfinite(theta) || !std::isfinite(psi)) {
    fail(ErrorKind::Domain, "Euler angles must be finite");
  }
  // phi and psi are reduced mod 4pi so half-integer representations keep their sign.
  constexpr double kTwoPi = 2.0 * kPi;
  constexpr double kFourPi = 4.0 * kPi;
  auto wrap = [](double a) {
    double r = std::fmod(a, kFourPi);
    if (r < 0.0) r += kFourPi;
    return r >= kFourPi ? 0.0 : r;
  };
  theta = wrap(theta);
  if (theta >= kTwoPi) {
    // R_y(2pi) = R_z(2pi)
    theta -= kTwoPi;
    psi += kTwoPi;
  }
  if (theta > kPi) {
    // R_y(theta) = R_z(pi) R_y(2pi - theta) R_z(pi)
    theta = kTwoPi - theta;
    phi += kPi;
    psi += kPi;
  }
  return {wrap(phi), theta, wrap(psi)};
}

namespace detail {

double small_d_series(HalfInt j, HalfInt m1, HalfInt m2, double theta) {
  const auto& fact = factorial_table();
  const int jpm = whole(j.twice() + m2.twice());
  const int jmm = whole(j.twice() - m2.twice());
  const int jpm1 = whole(j.twice() + m1.twice());
  const int jmm1 = whole(j.twice() - m1.twice());
  const int dm = whole(m1.twice() - m2.twice());  // m' - m
  const int two_j = j.twice();

  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const double root = std::sqrt(fact[jpm] * fact[jmm] * fact[jpm1] * fact[jmm1]);

  const int kmin = std::max(0, -dm);
  const int kmax = std::min(jpm, jmm1);
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double denom = fact[jpm - k] * fact[k] * fact[jmm1 - k] * fact[k + dm];
    const double sign = ((k + dm) % 2 == 0) ? 1.0 : -1.0;
    // cos exponent: 2j - 2k + m - m', sin exponent: 2k - m + m'
    const int cpow = two_j - 2 * k - dm;
    const int spow = 2 * k + dm;
    sum += sign / denom * std::pow(c, cpow) * std::pow(s, spow);
  }
  return root * sum;
}

std::vector<double> small_d_column_recurrence(HalfInt j, HalfInt m2, double theta) {
  const int dim = spin_dimension(j);
  std::vector<double> col(static_cast<std::size_t>(dim), 0.0);
  const double jj = j.value();
  const double m = m2.value();

  // Exact endpoints of the rotation group: d(0) = 1, d(pi)_{m'm} = (-1)^{j+m'} delta_{m',-m}.
  if (theta == 0.0) {
    col[static_cast<std::size_t>(basis_index(j, m2))] = 1.0;
    return col;
  }
  if (theta == kPi) {
    const int idx = basis_index(j, -m2);
    const int e = whole(j.twice() + (-m2).twice());
    col[static_cast<std::size_t>(idx)] = (e % 2 == 0) ? 1.0 : -1.0;
    return col;
  }

  const double cb = std::cos(theta);
  const double sb = std::sin(theta);
  const double log_c = std::log(std::cos(0.5 * theta));
  const double log_s = std::log(std::sin(0.5 * theta));
  const int jpm = whole(j.twice() + m2.twice());
  const int jmm = whole(j.twice() - m2.twice());
  const double log_binom =
      0.5 * (log_factorial(j.twice()) - log_factorial(jpm) - log_factorial(jmm));

  // Rows m' >= split come from the downward sweep, the rest from the upward sweep.
  // The split sits at the classical projection m cos(theta).
  int split = basis_index(j, j);
  {
    const double target = m * cb;
    double best = 1e300;
    for (int i = 0; i < dim; ++i) {
      const double mp = basis_projection(j, i).value();
      if (std::abs(mp - target) < best) {
        best = std::abs(mp - target);
        split = i;
      }
    }
  }

  constexpr double kBig = 1e150;
  auto jplus = [jj](double mp) { return std::sqrt((jj - mp + 1.0) * (jj + mp)); };   // <m'|J+|m'-1>
  auto jminus = [jj](double mp) { return std::sqrt((jj + mp + 1.0) * (jj - mp)); };  // <m'|J-|m'+1>

  // Downward: rows i = 0 (m' = j) .. split.
  {
    std::vector<double> v(static_cast<std::size_t>(split) + 1, 0.0);
    double log_scale = log_binom + jpm * log_c + jmm * log_s;
    v[0] = (jmm % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < split; ++i) {
      const double mp = basis_projection(j, i).value();
      const double prev = (i > 0) ? v[static_cast<std::size_t>(i) - 1] : 0.0;
      double next = (2.0 * (m - mp * cb) / sb * v[static_cast<std::size_t>(i)] - jminus(mp) * prev) / jplus(mp);
      v[static_cast<std::size_t>(i) + 1] = next;
      if (std::abs(next) > kBig) {
        for (int k = 0; k <= i + 1; ++k) v[static_cast<std::size_t>(k)] /= kBig;
        log_scale += std::log(kBig);
      }
    }
    for (int i = 0; i <= split; ++i) {
      col[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] * std::exp(log_scale);
    }
  }

  // Upward: rows i = dim-1 (m' = -j) .. split+1.
  if (split + 1 <= dim - 1) {
    const int count = dim - 1 - split;
    std::vector<double> v(static_cast<std::size_t>(count), 0.0);
    double log_scale = log_binom + jmm * log_c + jpm * log_s;
    v[0] = 1.0;
    for (int k = 0; k + 1 < count; ++k) {
      const int i = dim - 1 - k;
      const double mp = basis_projection(j, i).value();
      const double prev = (k > 0) ? v[static_cast<std::size_t>(k) - 1] : 0.0;
      double next = (2.0 * (m - mp * cb) / sb * v[static_cast<std::size_t>(k)] - jplus(mp) * prev) / jminus(mp);
      v[static_cast<std::size_t>(k) + 1] = next;
      if (std::abs(next) > kBig) {
        for (int q = 0; q <= k + 1; ++q) v[static_cast<std::size_t>(q)] /= kBig;
        log_scale += std::log(kBig);
      }
    }
    for (int k = 0; k < count; ++k) {
      col[static_cast<std::size_t>(dim - 1 - k)] = v[static_cast<std::size_t>(k)] * std::exp(log_scale);
    }
  }
  return col;
}

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

std::vector<int> primes_up_to(int n) {
  std::vector<int> primes;
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int q : primes) {
      if (q * q > p) break;
      if (p % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(p);
  }
  return primes;
}

// Adds sign * (exponents of n!) into exps.
void add_factorial(std::vector<int>& exps, const std::vector<int>& primes, int n, int sign) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    int e = 0;
    for (long pk = primes[i]; pk <= n; pk *= primes[i]) e += static_cast<int>(n / pk);
    exps[i] += sign * e;
  }
}

struct RacahArgs {
  int a1, a2, a3, a4;                       // triangle factorials, a4 = j1+j2+j3+1
  std::array<int, 6> proj;                  // j_i +- m_i
  int kmin, kmax;
  std::array<int, 6> den_offset;            // denominator factorial arguments minus +-k
  int sign_exp;                             // j1 - j2 - m3
};

// Denominator factorial arguments for summation index k:
//   k, j3-j2+k+m1, j3-j1+k-m2, j1+j2-j3-k, j1-k-m1, j2-k+m2
std::array<int, 6> den_args(const RacahArgs& r, int k) {
  return {k, r.den_offset[1] + k, r.den_offset[2] + k, r.den_offset[3] - k, r.den_offset[4] - k,
          r.den_offset[5] - k};
}

RacahArgs racah_args(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  const int J1 = j1.twice(), J2 = j2.twice(), J3 = j3.twice();
  const int M1 = m1.twice(), M2 = m2.twice(), M3 = m3.twice();
  RacahArgs r{};
  r.a1 = whole(J1 + J2 - J3);
  r.a2 = whole(J1 - J2 + J3);
  r.a3 = whole(-J1 + J2 + J3);
  r.a4 = whole(J1 + J2 + J3) + 1;
  r.proj = {whole(J1 + M1), whole(J1 - M1), whole(J2 + M2), whole(J2 - M2), whole(J3 + M3), whole(J3 - M3)};
  r.den_offset = {0, whole(J3 - J2 + M1), whole(J3 - J1 - M2), whole(J1 + J2 - J3), whole(J1 - M1), whole(J2 + M2)};
  r.kmin = std::max({0, -r.den_offset[1], -r.den_offset[2]});
  r.kmax = std::min({r.den_offset[3], r.den_offset[4], r.den_offset[5]});
  r.sign_exp = whole(J1 - J2 - M3);
  return r;
}

// Returns false when the symbol vanishes by selection rules.
bool three_j_nonzero(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  require_valid(j1, m1);
  require_valid(j2, m2);
  require_valid(j3, m3);
  if (m1.twice() + m2.twice() + m3.twice() != 0) return false;
  if ((j1.twice() + j2.twice() + j3.twice()) % 2 != 0) return false;
  if (j3.twice() < std::abs(j1.twice() - j2.twice()) || j3.twice() > j1.twice() + j2.twice()) return false;
  return true;
}

}  // namespace

double three_j_exact(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  if (!three_j_nonzero(j1, j2, j3, m1, m2, m3)) return 0.0;
  const RacahArgs r = racah_args(j1, j2, j3, m1, m2, m3);
  if (r.kmin > r.kmax) return 0.0;

  const std::vector<int> primes = primes_up_to(std::max(2, r.a4));
  const std::size_t np = primes.size();

  // Square of the prefactor: Delta * prod (j_i +- m_i)!
  std::vector<int> root(np, 0);
  add_factorial(root, primes, r.a1, +1);
  add_factorial(root, primes, r.a2, +1);
  add_factorial(root, primes, r.a3, +1);
  add_factorial(root, primes, r.a4, -1);
  for (int n : r.proj) add_factorial(root, primes, n, +1);

  // Sum of (-1)^k / den_k over the common denominator prod p^{max_k e_kp}.
  std::vector<std::vector<int>> den;
  std::vector<int> common(np, 0);
  for (int k = r.kmin; k <= r.kmax; ++k) {
    std::vector<int> e(np, 0);
    for (int n : den_args(r, k)) add_factorial(e, primes, n, +1);
    for (std::size_t i = 0; i < np; ++i) common[i] = std::max(common[i], e[i]);
    den.push_back(std::move(e));
  }
  BigInt sum = 0;
  for (std::size_t t = 0; t < den.size(); ++t) {
    BigInt term = 1;
    for (std::size_t i = 0; i < np; ++i) {
      const int e = common[i] - den[t][i];
      if (e > 0) term *= boost::multiprecision::pow(BigInt(primes[i]), static_cast<unsigned>(e));
    }
    const int k = r.kmin + static_cast<int>(t);
    if (k % 2 == 0) sum += term; else sum -= term;
  }
  if (sum == 0) return 0.0;

  // value^2 = sum^2 * prod p^{root_p - 2 common_p}
  BigInt num = sum * sum;
  BigInt den_total = 1;
  for (std::size_t i = 0; i < np; ++i) {
    const int e = root[i] - 2 * common[i];
    if (e > 0) num *= boost::multiprecision::pow(BigInt(primes[i]), static_cast<unsigned>(e));
    if (e < 0) den_total *= boost::multiprecision::pow(BigInt(primes[i]), static_cast<unsigned>(-e));
  }
  const BigFloat magnitude = boost::multiprecision::sqrt(BigFloat(num) / BigFloat(den_total));
  double value = magnitude.convert_to<double>();
  if (sum < 0) value = -value;
  if (r.sign_exp % 2 != 0) value = -value;
  return value;
}

double three_j_float(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  if (!three_j_nonzero(j1, j2, j3, m1, m2, m3)) return 0.0;
  const RacahArgs r = racah_args(j1, j2, j3, m1, m2, m3);
  if (r.kmin > r.kmax) return 0.0;
  double log_root = log_factorial(r.a1) + log_factorial(r.a2) + log_factorial(r.a3) - log_factorial(r.a4);
  for (int n : r.proj) log_root += log_factorial(n);
  log_root *= 0.5;
  double sum = 0.0;
  for (int k = r.kmin; k <= r.kmax; ++k) {
    double log_den = 0.0;
    for (int n : den_args(r, k)) log_den += log_factorial(n);
    const double term = std::exp(log_root - log_den);
    sum += (k % 2 == 0) ? term : -term;
  }
  return (r.sign_exp % 2 == 0) ? sum : -sum;
}

}  // namespace detail

double small_d(HalfInt j, HalfInt m1, HalfInt m2, double theta) {
  require_valid(j, m1);
  require_valid(j, m2);
  theta = check_theta(theta);
  if (j.twice() <= kSeriesMaxTwiceJ) return detail::small_d_series(j, m1, m2, theta);
  return detail::small_d_column_recurrence(j, m2, theta)[static_cast<std::size_t>(basis_index(j, m1))];
}

RMatrix small_d_matrix(HalfInt j, double theta) {
  if (j.twice() < 0) fail(ErrorKind::Domain, "spin must be non-negative");
  theta = check_theta(theta);
  const int dim = spin_dimension(j);
  RMatrix d(dim, dim);
  for (int c = 0; c < dim; ++c) {
    const HalfInt m2 = basis_projection(j, c);
    if (j.twice() <= kSeriesMaxTwiceJ) {
      for (int r = 0; r < dim; ++r) d(r, c) = detail::small_d_series(j, basis_projection(j, r), m2, theta);
    } else {
      const auto col = detail::small_d_column_recurrence(j, m2, theta);
      for (int r = 0; r < dim; ++r) d(r, c) = col[static_cast<std::size_t>(r)];
    }
  }
  return d;
}

Complex wigner_D(HalfInt j, HalfInt m1, HalfInt m2, const EulerAngles& a) {
  const double d = small_d(j, m1, m2, a.theta);
  return std::polar(d, -(m1.value() * a.phi + m2.value() * a.psi));
}

CMatrix wigner_D_matrix(HalfInt j, const EulerAngles& a) {
  const RMatrix d = small_d_matrix(j, a.theta);
  const int dim = spin_dimension(j);
  CMatrix D(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const double m1 = basis_projection(j, r).value();
    for (int c = 0; c < dim; ++c) {
      const double m2 = basis_projection(j, c).value();
      D(r, c) = std::polar(d(r, c), -(m1 * a.phi + m2 * a.psi));
    }
  }
  return D;
}

double three_j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  if (std::max({j1.twice(), j2.twice(), j3.twice()}) <= kExact3jMaxTwiceJ) {
    return detail::three_j_exact(j1, j2, j3, m1, m2, m3);
  }
  return detail::three_j_float(j1, j2, j3, m1, m2, m3);
}

}  // namespace tomo
