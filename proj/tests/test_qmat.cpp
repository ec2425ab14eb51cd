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

#include "qre/qmat.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace qre;

namespace {

Mat rand_herm(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> g;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cxd(g(gen), g(gen));
  return 0.5 * (a + a.adjoint().eval());
}

}  // namespace

TEST_CASE("kron uses row-major composite ordering") {
  Mat a = Mat::Zero(2, 2), b = Mat::Zero(3, 3);
  a(1, 0) = 1.0;
  b(2, 1) = 1.0;
  Mat k = kron(a, b);
  // |1,2><0,1| should sit at row 1*3+2, col 0*3+1.
  CHECK(k(5, 1) == cxd(1.0, 0.0));
  CHECK(k.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("partial trace of product factors") {
  Mat a = rand_herm(2, 1), b = rand_herm(3, 2), c = rand_herm(2, 3);
  Mat abc = kron(kron(a, b), c);
  Mat t2 = partial_trace(abc, 2, {2, 3, 2});
  CHECK((t2 - b.trace() * kron(a, c)).cwiseAbs().maxCoeff() < 1e-12);
  Mat t1 = partial_trace(abc, 1, {2, 3, 2});
  CHECK((t1 - a.trace() * kron(b, c)).cwiseAbs().maxCoeff() < 1e-12);
  Mat t3 = partial_trace(abc, 3, {2, 3, 2});
  CHECK((t3 - c.trace() * kron(a, b)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial transpose detects Bell entanglement") {
  Vec bell = Vec::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  Mat rho = bell * bell.adjoint();
  Mat pt = partial_transpose(rho, 2, {2, 2});
  Eigen::SelfAdjointEigenSolver<Mat> es(pt);
  CHECK(es.eigenvalues().minCoeff() == doctest::Approx(-0.5));
  // product states stay PSD
  Mat p = kron(rand_herm(2, 4) * rand_herm(2, 4).adjoint(),
               rand_herm(2, 5) * rand_herm(2, 5).adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es2(partial_transpose(p, 1, {2, 2}));
  CHECK(es2.eigenvalues().minCoeff() > -1e-12);
}

TEST_CASE("system exchange swaps tensor factors") {
  Mat a = rand_herm(2, 7), b = rand_herm(3, 8);
  Mat ab = kron(a, b);
  Mat ba = system_exchange(ab, 1, 2, {2, 3});
  CHECK((ba - kron(b, a)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("real embedding doubles eigenvalues") {
  Mat h = rand_herm(3, 11);
  RMat e = real_embedding(h);
  CHECK((e - e.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Eigen::SelfAdjointEigenSolver<RMat> er(e);
  for (int i = 0; i < 3; ++i) {
    CHECK(er.eigenvalues()(2 * i) ==
          doctest::Approx(es.eigenvalues()(i)).epsilon(1e-10));
    CHECK(er.eigenvalues()(2 * i + 1) ==
          doctest::Approx(es.eigenvalues()(i)).epsilon(1e-10));
  }
}

TEST_CASE("validated constructors reject bad input") {
  Mat m(2, 2);
  m << 1.0, cxd(0, 1), cxd(0, 1), 1.0;  // not hermitian
  CHECK_THROWS_AS((void)HermitianMatrix(Mat(m)), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(2.0 * Mat::Identity(2, 2), {2}),
                  std::invalid_argument);
  Mat neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(DensityMatrix(neg, {2}), std::invalid_argument);
}

TEST_CASE("channel representations agree") {
  double g = 0.3;
  Mat u = Mat::Zero(4, 2);
  u(0, 0) = 1.0;
  u(1, 1) = std::sqrt(g);
  u(2, 1) = std::sqrt(1.0 - g);
  auto ch = QuantumChannel::stinespring(u, 2, 2);
  auto kr = QuantumChannel::kraus(ch.kraus_ops());
  auto cj = QuantumChannel::choi(ch.choi_matrix(), 2, 2);
  DensityMatrix rho = random_density(2, 2, 99);
  Mat o1 = ch.apply(rho.mat()), o2 = kr.apply(rho.mat()), o3 = cj.apply(rho.mat());
  CHECK((o1 - o2).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((o1 - o3).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(o1.trace().real() == doctest::Approx(1.0));
  Mat env = ch.apply_complementary(rho.mat());
  CHECK(env.trace().real() == doctest::Approx(1.0));
  // non-CP Choi refused
  Mat bad = -Mat::Identity(4, 4);
  CHECK_THROWS_AS(QuantumChannel::choi(bad, 2, 2), std::invalid_argument);
}

TEST_CASE("entropy and relative entropy oracles") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  CHECK(entropy_exact(d) ==
        doctest::Approx(-0.25 * std::log(0.25) - 0.75 * std::log(0.75)));
  DensityMatrix rho = random_density(3, 3, 5);
  CHECK(rel_entr_exact(rho.mat(), rho.mat()) == doctest::Approx(0.0));
  // commuting case reduces to classical KL
  Mat s = Mat::Zero(2, 2);
  s(0, 0) = 0.5;
  s(1, 1) = 0.5;
  double kl = 0.25 * std::log(0.25 / 0.5) + 0.75 * std::log(0.75 / 0.5);
  CHECK(rel_entr_exact(d, s) == doctest::Approx(kl));
  // support violation
  Mat pure = Mat::Zero(2, 2);
  pure(0, 0) = 1.0;
  Mat other = Mat::Zero(2, 2);
  other(1, 1) = 1.0;
  CHECK(std::isinf(rel_entr_exact(other, pure)));
}

TEST_CASE("random states are valid and deterministic") {
  DensityMatrix a = random_density(4, 2, 42), b = random_density(4, 2, 42);
  CHECK((a.mat() - b.mat()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.mat().trace().real() == doctest::Approx(1.0));
  DensityMatrix p = random_pure({2, 2, 2}, 7);
  CHECK((p.mat() * p.mat() - p.mat()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(p.dims() == std::vector<int>{2, 2, 2});
}

TEST_CASE("clamped eigenvalues") {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1e-10;
  RVec ev = clamped_eigenvalues(m);
  CHECK(ev.minCoeff() == 0.0);
  m(1, 1) = -1e-6;
  CHECK_THROWS_AS(clamped_eigenvalues(m), std::domain_error);
}
