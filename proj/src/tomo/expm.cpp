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

#include "tomo/expm.hpp"

#include <cmath>

#include "tomo/error.hpp"

namespace tomo {

RMatrix expm(const RMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::Domain, "expm needs a square matrix");
  if (!a.allFinite()) fail(ErrorKind::Numerical, "expm input has non-finite entries");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;
  if (a.isZero(0.0)) return RMatrix::Identity(n, n);

  static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};
  constexpr double kTheta13 = 5.371920351148152;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  const RMatrix s = a / std::ldexp(1.0, squarings);

  const RMatrix id = RMatrix::Identity(n, n);
  const RMatrix a2 = s * s;
  const RMatrix a4 = a2 * a2;
  const RMatrix a6 = a4 * a2;
  const RMatrix u = s * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                         b[3] * a2 + b[1] * id);
  const RMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                    b[2] * a2 + b[0] * id;
  RMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

}  // namespace tomo
