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

#include "qre/conic.hpp"
#include "qre/quadrature.hpp"

namespace qre {

// Record of the PSD blocks emitted by an entropy-cone builder. For every
// builder the block count is k + m; sizes (pre-embedding) are:
//   quantum_entr / trace_logm / op_rel_entr : all blocks 2n
//   quantum_rel_entr (both arguments variable) :
//       k blocks of 2n^2, m blocks of n^2+1
//   quantum_rel_entr (either argument constant) : all blocks 2n
//   quantum_cond_entr : all blocks 2n^2
struct EntropyEpigraphHandle {
  std::string function;
  int m = 0, k = 0;
  int n = 0;                    // input dimension
  std::vector<int> block_dims;  // emitted PSD block sizes, pre-embedding
  AffineMatrixExpr matrix;      // matrix-valued epigraph (op_rel_entr)
  AffineScalar scalar;          // scalar epi/hypograph value
};

// T >= D_op(rho, sigma) = rho^{1/2} log(rho^{1/2} sigma^{-1} rho^{1/2}) rho^{1/2}
// in the (m,k) quadrature approximation; k geometric-mean ladder blocks for
// the 2^{-k} matrix power, then one 2n Schur block per quadrature node.
EntropyEpigraphHandle hypo_op_rel_entr(ConicProgram& prog,
                                       const AffineMatrixExpr& rho,
                                       const AffineMatrixExpr& sigma,
                                       int m = 3, int k = 3);

// scalar h with h <= H(rho) = -Tr[rho log rho].
EntropyEpigraphHandle hypo_quantum_entr(ConicProgram& prog,
                                        const AffineMatrixExpr& rho,
                                        int m = 3, int k = 3);

// scalar u with u <= Tr[sigma log rho], sigma constant PSD.
EntropyEpigraphHandle epi_trace_logm(ConicProgram& prog, const Mat& sigma,
                                     const AffineMatrixExpr& rho,
                                     int m = 3, int k = 3);

// scalar d with d >= D(rho || sigma). Dispatches on structurally-constant
// arguments to the 2n specializations; otherwise lifts to dimension n^2
// with the node blocks compressed against vec(I). force_variable keeps the
// lifted path even for constant inputs.
EntropyEpigraphHandle epi_quantum_rel_entr(ConicProgram& prog,
                                           const AffineMatrixExpr& rho,
                                           const AffineMatrixExpr& sigma,
                                           int m = 3, int k = 3,
                                           bool force_variable = false);

// scalar c with c <= H(joint) - H(marginal after tracing traced_sys);
// implemented as -D(joint || I (x) marginal) on the n^2 lift.
EntropyEpigraphHandle hypo_quantum_cond_entr(ConicProgram& prog,
                                             const AffineMatrixExpr& joint,
                                             const std::vector<int>& dims,
                                             int traced_sys, int m = 3,
                                             int k = 3);

}  // namespace qre
