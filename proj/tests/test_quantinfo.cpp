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

#include "qre/quantinfo.hpp"

#include <cmath>

#include "doctest.h"

using namespace qre;

TEST_CASE("cq capacity limits") {
  DensityMatrix mixed(0.5 * Mat::Identity(2, 2), {2});
  auto same = cq_capacity({mixed, mixed});
  CHECK(std::abs(same.value_bits) < 1e-6);

  Mat e0 = Mat::Zero(2, 2), e1 = Mat::Zero(2, 2);
  e0(0, 0) = 1.0;
  e1(1, 1) = 1.0;
  auto orth = cq_capacity({DensityMatrix(e0, {2}), DensityMatrix(e1, {2})});
  CHECK(orth.value_bits == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(orth.prob[0] == doctest::Approx(0.5).epsilon(1e-4));
  double psum = orth.prob[0] + orth.prob[1];
  CHECK(std::abs(psum - 1.0) < 1e-7);
}

TEST_CASE("binary pure-state capacity matches the overlap formula") {
  for (unsigned seed = 0; seed < 3; ++seed) {
    DensityMatrix s0 = random_pure({2}, 10 + 2 * seed);
    DensityMatrix s1 = random_pure({2}, 11 + 2 * seed);
    Eigen::SelfAdjointEigenSolver<Mat> e0(s0.mat()), e1(s1.mat());
    double exact = cq_capacity_pure_binary_exact(e0.eigenvectors().col(1),
                                                 e1.eigenvectors().col(1));
    auto res = cq_capacity({s0, s1});
    CHECK(std::abs(res.value_bits - exact) < 1e-5);
  }
}

TEST_CASE("amplitude damping isometry") {
  auto ch = amplitude_damping_isometry(0.3);
  const Mat& u = ch.isometry();
  CHECK((u.adjoint() * u - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  Mat e1 = Mat::Zero(2, 2);
  e1(1, 1) = 1.0;
  Mat out = ch.apply(e1);
  CHECK(out(0, 0).real() == doctest::Approx(0.3));
  CHECK(out(1, 1).real() == doctest::Approx(0.7));
  CHECK_THROWS_AS(amplitude_damping_isometry(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(amplitude_damping_isometry(1.1), std::invalid_argument);
}

TEST_CASE("entanglement-assisted capacity against the scan oracle") {
  CHECK(ea_capacity_ad_oracle(0.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(ea_capacity_ad_oracle(1.0) == doctest::Approx(0.0).epsilon(1e-9));
  for (double g : {0.2, 0.5}) {
    auto res = ea_capacity(amplitude_damping_isometry(g), 3, 3, 1e-8,
                           /*real_input=*/true);
    CHECK(std::abs(res.value_bits - ea_capacity_ad_oracle(g)) < 1e-4);
    CHECK(std::abs(res.rho_opt.trace().real() - 1.0) < 1e-7);
  }
}

TEST_CASE("quantum capacity of amplitude damping") {
  CHECK(q_capacity_ad_oracle(0.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(q_capacity_ad_oracle(0.5)) < 1e-9);
  for (double g : {0.1, 0.3}) {
    auto res = q_capacity_amplitude_damping(g);
    CHECK(std::abs(res.value_bits - q_capacity_ad_oracle(g)) < 1e-4);
  }
  CHECK_THROWS_AS(q_capacity_amplitude_damping(0.6), std::invalid_argument);
  // a wrong degrading map is rejected by the numerical check
  CHECK_THROWS_AS(
      q_capacity_degradable(amplitude_damping_isometry(0.1),
                            amplitude_damping_isometry(0.9)),
      std::invalid_argument);
}

TEST_CASE("relative entropy of entanglement") {
  Vec bell = Vec::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  DensityMatrix rho(bell * bell.adjoint(), {2, 2});
  auto res = ree_ppt(rho, {2, 2});
  CHECK(std::abs(res.value_bits - 1.0) < 1e-4);
  CHECK(std::abs(res.tau_opt.trace().real() - 1.0) < 1e-6);

  Mat prod = kron(random_density(2, 2, 31).mat(), random_density(2, 2, 32).mat());
  auto zero = ree_ppt(DensityMatrix(prod, {2, 2}), {2, 2});
  CHECK(std::abs(zero.value_bits) < 1e-6);
}

TEST_CASE("conditional mutual information oracles") {
  Mat abc = kron(kron(random_density(2, 2, 41).mat(),
                      random_density(2, 2, 42).mat()),
                 random_density(2, 2, 43).mat());
  CHECK(std::abs(cmi(DensityMatrix(abc, {2, 2, 2}), {2, 2, 2})) < 1e-10);
  Vec ghz = Vec::Zero(8);
  ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
  CHECK(cmi(DensityMatrix(ghz * ghz.adjoint(), {2, 2, 2}), {2, 2, 2}) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("counterexample family endpoints and violation") {
  auto s0 = counterexample_state(0.0);
  CHECK(std::abs(cmi(s0, {2, 2, 2})) < 1e-10);
  // theta = 0 state is |0>_A (x) (|00> + |11>)/sqrt(2) on (B, C)
  Vec want = Vec::Zero(8);
  want(0) = want(3) = 1.0 / std::sqrt(2.0);
  CHECK((s0.mat() - want * want.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(counterexample_state(2.0), std::invalid_argument);

  auto r = rel_entr_recovery(counterexample_state(0.3), {2, 2, 2});
  CHECK(r.violation);
  CHECK(r.rer_bits - r.cmi_bits > 1e-3);
  // recovered state is produced by a genuine channel
  CHECK(std::abs((partial_trace(r.choi_opt, 2, {2, 4}) - Mat::Identity(2, 2))
                     .cwiseAbs().maxCoeff()) < 1e-6);
}

TEST_CASE("markov states are perfectly recoverable") {
  Mat bc = kron(random_density(2, 2, 51).mat(), random_density(2, 2, 52).mat());
  Mat abc = kron(random_density(2, 2, 53).mat(), bc);
  auto r = rel_entr_recovery(DensityMatrix(abc, {2, 2, 2}), {2, 2, 2});
  CHECK(std::abs(r.rer_bits) < 1e-4);
  CHECK(!r.violation);
}

TEST_CASE("scatter is deterministic under a fixed seed") {
  auto a = recovery_scatter(2, 77, {2, 2, 2});
  auto b = recovery_scatter(2, 77, {2, 2, 2});
  REQUIRE(a.size() == 2);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == doctest::Approx(b[i].first).epsilon(1e-12));
    CHECK(a[i].second == doctest::Approx(b[i].second).epsilon(1e-12));
  }
  CHECK_THROWS_AS(rel_entr_recovery(random_pure({2, 2, 4}, 1), {2, 2, 4}),
                  std::invalid_argument);
}
