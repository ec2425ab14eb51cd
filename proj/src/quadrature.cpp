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

#include <Eigen/Dense>
#include <cmath>

namespace qre {

namespace {

// Legendre polynomial P_m and derivative at x, by recurrence.
std::pair<double, double> legendre(int m, double x) {
  double p0 = 1.0, p1 = x;
  if (m == 0) return {1.0, 0.0};
  for (int n = 1; n < m; ++n) {
    double p2 = ((2 * n + 1) * x * p1 - n * p0) / (n + 1);
    p0 = p1;
    p1 = p2;
  }
  double dp = m * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

// Golub-Welsch: eigenvalues of the Jacobi matrix. Used as starting points
// and as a cross-check for the Newton iteration.
std::vector<double> jacobi_roots(int m) {
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, m);
  for (int n = 1; n < m; ++n) {
    double b = n / std::sqrt(4.0 * n * n - 1.0);
    jac(n, n - 1) = b;
    jac(n - 1, n) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac, Eigen::EigenvaluesOnly);
  std::vector<double> r(es.eigenvalues().data(), es.eigenvalues().data() + m);
  return r;
}

}  // namespace

QuadratureScheme QuadratureScheme::gauss_legendre_01(int m, int k) {
  if (m < 1) throw std::invalid_argument("quadrature node count must be >= 1");
  if (k < 0) throw std::invalid_argument("scaling exponent must be >= 0");
  QuadratureScheme s;
  s.m = m;
  s.k = k;
  std::vector<double> roots = jacobi_roots(m);
  for (int i = 0; i < m; ++i) {
    double x = roots[i];
    // Newton refinement on P_m; tolerance 1e-14.
    for (int it = 0; it < 50; ++it) {
      auto [p, dp] = legendre(m, x);
      if (m == 1) break;  // root is exactly 0
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-14) break;
    }
    if (m == 1) x = 0.0;
    if (std::abs(x - roots[i]) > 1e-10)
      throw std::runtime_error("Legendre root refinement diverged");
    auto [p, dp] = legendre(m, x);
    (void)p;
    double w = (m == 1) ? 2.0 : 2.0 / ((1.0 - x * x) * dp * dp);
    s.nodes.push_back(0.5 * (x + 1.0));  // affine map [-1,1] -> [0,1]
    s.weights.push_back(0.5 * w);
  }
  return s;
}

double rational_log(double x, const QuadratureScheme& scheme) {
  if (x <= 0) throw std::domain_error("rational_log requires x > 0");
  double y = x;
  for (int i = 0; i < scheme.k; ++i) y = std::sqrt(y);
  double acc = 0;
  for (size_t j = 0; j < scheme.nodes.size(); ++j)
    acc += scheme.weights[j] * (y - 1.0) / (scheme.nodes[j] * (y - 1.0) + 1.0);
  return std::ldexp(acc, scheme.k);
}

}  // namespace qre
