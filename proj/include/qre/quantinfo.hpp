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

#include "qre/entrcones.hpp"
#include "qre/qmat.hpp"
#include "qre/solver.hpp"

namespace qre {

struct CapacityResult {
  double value_nats = 0;
  double value_bits = 0;
  std::vector<double> prob;  // cq optimizer (input distribution)
  Mat rho_opt;               // density optimizer (ea / quantum capacity)
  SolveStatus status = SolveStatus::kNumericalLimit;
  int m = 3, k = 3;
};

struct ReeResult {
  double value_nats = 0;
  double value_bits = 0;
  Mat tau_opt;
  SolveStatus status = SolveStatus::kNumericalLimit;
  int m = 3, k = 3;
};

struct RecoveryResult {
  double cmi_bits = 0;   // exact, eigendecomposition-based
  double rer_bits = 0;   // solved minimum of the recovery objective
  Mat choi_opt;          // optimal recovery channel B -> B(x)C
  bool violation = false;  // rer > cmi + margin
  SolveStatus status = SolveStatus::kNumericalLimit;
  int m = 3, k = 3;
};

// Margin (bits) above which rer > cmi is flagged as a genuine violation;
// sits well above the composed solver + approximation error (~1e-5).
constexpr double kRecoveryViolationMargin = 1e-4;

// Holevo capacity of a classical-quantum channel x -> states[x], in the
// maximization form over input distributions. The per-symbol entropies are
// exact constants; only the mixture entropy goes through the SDP.
CapacityResult cq_capacity(const std::vector<DensityMatrix>& states, int m = 3,
                           int k = 3, double tol = 1e-8);

// h2((1+eps)/2) with eps = |<psi0|psi1>|, in bits.
double cq_capacity_pure_binary_exact(const Vec& psi0, const Vec& psi1);

// Stinespring isometry 2 -> 2x2 of the amplitude-damping channel.
QuantumChannel amplitude_damping_isometry(double gamma);

// Entanglement-assisted classical capacity max_rho H(B|E) + H(B).
// real_input restricts to real symmetric inputs, which is lossless for
// channels commuting with entrywise conjugation (all isometry entries real).
CapacityResult ea_capacity(const QuantumChannel& ch, int m = 3, int k = 3,
                           double tol = 1e-8, bool real_input = false,
                           int dim_cap = 16);

// Exact univariate oracle for the amplitude-damping channel (bits):
// maximizes the channel mutual information over diagonal inputs.
double ea_capacity_ad_oracle(double gamma);

// Coherent-information capacity of a degradable channel, as the conditional
// entropy H(F|E') of W Phi(rho) W*. W must be an isometry of a degrading map
// (verified numerically within 1e-8).
CapacityResult q_capacity_degradable(const QuantumChannel& channel,
                                     const QuantumChannel& degrading, int m = 3,
                                     int k = 3, double tol = 1e-8,
                                     bool real_input = false);

// Amplitude-damping specialization with the degrading parameter
// (1-2 gamma)/(1-gamma); refuses gamma > 1/2 (not degradable there).
CapacityResult q_capacity_amplitude_damping(double gamma, int m = 3, int k = 3,
                                            double tol = 1e-8);

// Exact diagonal-input scan oracle for the amplitude-damping channel (bits).
double q_capacity_ad_oracle(double gamma);

// PPT relaxation of the relative entropy of entanglement (value in
// nats/bits, optimal PPT state tau).
ReeResult ree_ppt(const DensityMatrix& rho, const std::vector<int>& dims,
                  int m = 3, int k = 3, double tol = 1e-8);

// Conditional mutual information I(A:C|B) in bits, exact.
double cmi(const DensityMatrix& rho_abc, const std::vector<int>& dims);

// min over channels Lambda: B -> B(x)C of D(rho_ABC || (id_A (x)
// Lambda)(rho_AB)), with the channel expressed through its Choi matrix.
RecoveryResult rel_entr_recovery(const DensityMatrix& rho_abc,
                                 const std::vector<int>& dims, int m = 3,
                                 int k = 3, double tol = 1e-8,
                                 int dim_cap = 12);

// Pure (2,2,2) family  (1/sqrt2)(|0>_B |00>_AC + |1>_B (cos t |01>_AC +
// sin t |10>_AC)), stored in (A,B,C) order.
DensityMatrix counterexample_state(double theta);

// (cmi_bits, rer_bits) for Haar-random pure states; deterministic per seed.
std::vector<std::pair<double, double>> recovery_scatter(
    int count, unsigned seed, const std::vector<int>& dims, int m = 3, int k = 3,
    double tol = 1e-8);

}  // namespace qre
