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

#include "qre/quadrature.hpp"

#include <cmath>

#include "doctest.h"

using namespace qre;

TEST_CASE("closed-form low-order rules") {
  auto q2 = QuadratureScheme::gauss_legendre_01(2);
  double d = 0.5 / std::sqrt(3.0);
  CHECK(q2.nodes[0] == doctest::Approx(0.5 - d).epsilon(1e-14));
  CHECK(q2.nodes[1] == doctest::Approx(0.5 + d).epsilon(1e-14));
  CHECK(q2.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q2.weights[1] == doctest::Approx(0.5).epsilon(1e-14));

  auto q3 = QuadratureScheme::gauss_legendre_01(3);
  double e = 0.5 * std::sqrt(3.0 / 5.0);
  CHECK(q3.nodes[0] == doctest::Approx(0.5 - e).epsilon(1e-14));
  CHECK(q3.nodes[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q3.nodes[2] == doctest::Approx(0.5 + e).epsilon(1e-14));
  CHECK(q3.weights[0] == doctest::Approx(5.0 / 18.0).epsilon(1e-14));
  CHECK(q3.weights[1] == doctest::Approx(8.0 / 18.0).epsilon(1e-14));
  CHECK(q3.weights[2] == doctest::Approx(5.0 / 18.0).epsilon(1e-14));
}

TEST_CASE("polynomial exactness up to degree 2m-1") {
  for (int m = 1; m <= 8; ++m) {
    auto q = QuadratureScheme::gauss_legendre_01(m);
    for (int d = 0; d <= 2 * m - 1; ++d) {
      double s = 0;
      for (int j = 0; j < m; ++j) s += q.weights[j] * std::pow(q.nodes[j], d);
      CHECK(s == doctest::Approx(1.0 / (d + 1)).epsilon(1e-13));
    }
    // degree 2m fails, confirming the rule is not over-exact by accident
    double s = 0;
    for (int j = 0; j < m; ++j) s += q.weights[j] * std::pow(q.nodes[j], 2 * m);
    CHECK(std::abs(s - 1.0 / (2 * m + 1)) > 1e-12);
  }
}

TEST_CASE("node symmetry and interval bounds") {
  for (int m = 1; m <= 10; ++m) {
    auto q = QuadratureScheme::gauss_legendre_01(m);
    for (int j = 0; j < m; ++j) {
      CHECK(q.nodes[j] > 0.0);
      CHECK(q.nodes[j] < 1.0);
      CHECK(q.nodes[j] + q.nodes[m - 1 - j] == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(q.weights[j] == doctest::Approx(q.weights[m - 1 - j]).epsilon(1e-13));
      if (j > 0) CHECK(q.nodes[j] > q.nodes[j - 1]);
    }
  }
  CHECK_THROWS_AS(QuadratureScheme::gauss_legendre_01(0), std::invalid_argument);
}

TEST_CASE("rational log basics") {
  auto q = QuadratureScheme::gauss_legendre_01(3, 3);
  CHECK(rational_log(1.0, q) == doctest::Approx(0.0));
  // scaling identity: r_{m,k}(x) = 2^k r_{m,0}(x^(1/2^k))
  auto q0 = QuadratureScheme::gauss_legendre_01(3, 0);
  for (double x : {0.2, 0.9, 1.7, 5.0}) {
    CHECK(rational_log(x, q) ==
          doctest::Approx(8.0 * rational_log(std::pow(x, 0.125), q0))
              .epsilon(1e-12));
  }
}

TEST_CASE("error is antisymmetric and one-sided above 1") {
  auto q = QuadratureScheme::gauss_legendre_01(3, 3);
  for (int i = 0; i <= 200; ++i) {
    double x = std::exp(-3.0 + 6.0 * i / 200.0);
    double r = rational_log(x, q);
    double rinv = rational_log(1.0 / x, q);
    CHECK(r + rinv == doctest::Approx(0.0).epsilon(1e-12));
    if (x >= 1.0) CHECK(r <= std::log(x) + 1e-12);
  }
}

TEST_CASE("error decreases with order on the reference grid") {
  double prev = 1e9;
  for (int mk : {1, 2, 3}) {
    auto q = QuadratureScheme::gauss_legendre_01(mk, mk);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      double x = std::exp(-2.0 + 4.0 * i / 999.0);
      worst = std::max(worst, std::abs(rational_log(x, q) - std::log(x)));
    }
    CHECK(worst < prev);
    prev = worst;
  }
  // frozen bound for (3,3); measured sup on this grid is 1.7270e-7
  CHECK(prev < 1.75e-7);
}
