// Copyright 2026 qre developers
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

#include <stdexcept>
#include <vector>

namespace qre {

// Gauss-Legendre rule on [0,1] plus the scaling exponent k used by the
// rational approximation of log. Nodes are strictly increasing in (0,1),
// weights sum to 1, and the rule integrates polynomials up to degree 2m-1
// exactly.
struct QuadratureScheme {
  int m = 0;
  int k = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  static QuadratureScheme gauss_legendre_01(int m, int k = 0);
};

// r_{m,k}(x) = 2^k sum_j w_j (y-1)/(t_j(y-1)+1) with y = x^(1/2^k).
// Increasing and concave on (0,inf); r(1) = 0 and the error against log
// is antisymmetric under x <-> 1/x (r <= log for x >= 1).
double rational_log(double x, const QuadratureScheme& scheme);

}  // namespace qre
