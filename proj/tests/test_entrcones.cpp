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

#include "qre/entrcones.hpp"

#include <cmath>

#include "doctest.h"
#include "qre/solver.hpp"

using namespace qre;

namespace {

// Eigendecomposition-based matrix functions for the oracles.
Mat func_of(const Mat& h, double (*f)(double)) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  RVec ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) ev(i) = f(ev(i));
  return es.eigenvectors() * ev.asDiagonal() *
         es.eigenvectors().adjoint();
}

Mat logm(const Mat& h) { return func_of(h, std::log); }
Mat sqrtm(const Mat& h) { return func_of(h, std::sqrt); }

// Mixes toward the maximally mixed state so eigenvalue ratios stay inside
// the quadrature's accurate range.
Mat conditioned(int n, unsigned seed) {
  Mat r = random_density(n, n, seed).mat();
  return 0.8 * r + 0.2 / n * Mat::Identity(n, n);
}

double solve_scalar(ConicProgram& prog, const AffineScalar& s, Sense sense) {
  prog.set_objective(s, sense);
  Solution sol = solve(prog);
  REQUIRE((sol.status == SolveStatus::kOptimal ||
           sol.status == SolveStatus::kNumericalLimit));
  return sol.objective;
}

}  // namespace

TEST_CASE("block census matches the table for all builders") {
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k) {
      const int n = 3;
      {
        ConicProgram p;
        auto h = hypo_op_rel_entr(p, AffineMatrixExpr(conditioned(n, 1)),
                                  p.hermitian_var(n), m, k);
        CHECK(h.block_dims == std::vector<int>(m + k, 2 * n));
      }
      {
        ConicProgram p;
        auto h = hypo_quantum_entr(p, p.hermitian_var(n), m, k);
        CHECK(h.block_dims == std::vector<int>(m + k, 2 * n));
      }
      {
        ConicProgram p;
        auto h = epi_trace_logm(p, conditioned(n, 2), p.hermitian_var(n), m, k);
        CHECK(h.block_dims == std::vector<int>(m + k, 2 * n));
      }
      {
        ConicProgram p;
        auto h = epi_quantum_rel_entr(p, p.hermitian_var(n), p.hermitian_var(n),
                                      m, k);
        std::vector<int> want(k, 2 * n * n);
        want.insert(want.end(), m, n * n + 1);
        CHECK(h.block_dims == want);
      }
      {
        ConicProgram p;  // constant second argument drops to the 2n form
        auto h = epi_quantum_rel_entr(p, p.hermitian_var(n),
                                      AffineMatrixExpr(conditioned(n, 3)), m, k);
        CHECK(h.block_dims == std::vector<int>(m + k, 2 * n));
      }
      {
        ConicProgram p;  // constant first argument likewise
        auto h = epi_quantum_rel_entr(p, AffineMatrixExpr(conditioned(n, 4)),
                                      p.hermitian_var(n), m, k);
        CHECK(h.block_dims == std::vector<int>(m + k, 2 * n));
      }
      {
        ConicProgram p;
        auto h = hypo_quantum_cond_entr(p, p.hermitian_var(4), {2, 2}, 1, m, k);
        CHECK(h.block_dims == std::vector<int>(m + k, 2 * 16));
      }
    }
}

TEST_CASE("quantum entropy matches the eigenvalue oracle") {
  for (unsigned seed = 0; seed < 5; ++seed) {
    int n = 2 + seed % 3;
    Mat rho = conditioned(n, 100 + seed);
    ConicProgram prog;
    auto h = hypo_quantum_entr(prog, AffineMatrixExpr(rho), 3, 3);
    double got = solve_scalar(prog, h.scalar, Sense::kMaximize);
    CHECK(std::abs(got - entropy_exact(rho)) < 1e-5);
  }
}

TEST_CASE("operator relative entropy trace matches the oracle") {
  for (unsigned seed = 0; seed < 5; ++seed) {
    int n = 2 + seed % 3;
    Mat rho = conditioned(n, 200 + seed), sigma = conditioned(n, 300 + seed);
    Mat rh = sqrtm(rho);
    Mat dop = rh * logm(rh * sigma.inverse() * rh) * rh;
    ConicProgram prog;
    auto h = hypo_op_rel_entr(prog, AffineMatrixExpr(rho),
                              AffineMatrixExpr(sigma), 3, 3);
    double got = solve_scalar(prog, h.matrix.trace(), Sense::kMinimize);
    CHECK(std::abs(got - dop.trace().real()) < 1e-5);
  }
}

TEST_CASE("trace of weighted log matches the oracle") {
  for (unsigned seed = 0; seed < 5; ++seed) {
    int n = 2 + seed % 3;
    Mat weight = random_density(n, n, 400 + seed).mat();
    Mat rho = conditioned(n, 500 + seed);
    ConicProgram prog;
    auto h = epi_trace_logm(prog, weight, AffineMatrixExpr(rho), 3, 3);
    double got = solve_scalar(prog, h.scalar, Sense::kMaximize);
    CHECK(std::abs(got - (weight * logm(rho)).trace().real()) < 1e-5);
  }
}

TEST_CASE("relative entropy matches the oracle on all three paths") {
  for (unsigned seed = 0; seed < 4; ++seed) {
    int n = 2 + seed % 2;
    Mat rho = conditioned(n, 600 + seed), sigma = conditioned(n, 700 + seed);
    double exact = rel_entr_exact(rho, sigma);
    {
      ConicProgram prog;  // lifted path, forced despite constant inputs
      auto h = epi_quantum_rel_entr(prog, AffineMatrixExpr(rho),
                                    AffineMatrixExpr(sigma), 3, 3,
                                    /*force_variable=*/true);
      CHECK(std::abs(solve_scalar(prog, h.scalar, Sense::kMinimize) - exact) <
            1e-5);
    }
    {
      ConicProgram prog;  // constant sigma
      AffineMatrixExpr rv = prog.hermitian_var(n);
      prog.add_eq(rv, rho);
      auto h = epi_quantum_rel_entr(prog, rv, AffineMatrixExpr(sigma), 3, 3);
      CHECK(std::abs(solve_scalar(prog, h.scalar, Sense::kMinimize) - exact) <
            1e-5);
    }
    {
      ConicProgram prog;  // constant rho
      AffineMatrixExpr sv = prog.hermitian_var(n);
      prog.add_eq(sv, sigma);
      auto h = epi_quantum_rel_entr(prog, AffineMatrixExpr(rho), sv, 3, 3);
      CHECK(std::abs(solve_scalar(prog, h.scalar, Sense::kMinimize) - exact) <
            1e-5);
    }
  }
}

TEST_CASE("conditional entropy matches the oracle for both subsystems") {
  for (unsigned seed = 0; seed < 4; ++seed) {
    Mat joint = conditioned(4, 800 + seed);
    for (int traced : {1, 2}) {
      Mat marg = partial_trace(joint, traced, {2, 2});
      double exact = entropy_exact(joint) - entropy_exact(marg);
      ConicProgram prog;
      auto h = hypo_quantum_cond_entr(prog, AffineMatrixExpr(joint), {2, 2},
                                      traced, 3, 3);
      double got = solve_scalar(prog, h.scalar, Sense::kMaximize);
      CHECK(std::abs(got - exact) < 1e-5);
    }
  }
}

TEST_CASE("approximation error decreases with the order") {
  Mat rho = conditioned(3, 900);
  double exact = entropy_exact(rho);
  double prev = 1e9;
  for (int mk : {1, 2, 3}) {
    ConicProgram prog;
    auto h = hypo_quantum_entr(prog, AffineMatrixExpr(rho), mk, mk);
    double err = std::abs(solve_scalar(prog, h.scalar, Sense::kMaximize) - exact);
    CHECK(err < prev + 1e-9);
    prev = err;
  }
  CHECK(prev < 1e-6);
}

TEST_CASE("preconditions are enforced") {
  ConicProgram prog;
  // trace_logm weight must be PSD
  Mat notpsd = -Mat::Identity(2, 2);
  CHECK_THROWS_AS(
      epi_trace_logm(prog, notpsd, prog.hermitian_var(2), 3, 3),
      std::invalid_argument);
  // cond_entr needs a two-factor split and a valid traced index
  CHECK_THROWS_AS(
      hypo_quantum_cond_entr(prog, prog.hermitian_var(8), {2, 2, 2}, 1, 3, 3),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hypo_quantum_cond_entr(prog, prog.hermitian_var(4), {2, 2}, 3, 3, 3),
      std::invalid_argument);
}
