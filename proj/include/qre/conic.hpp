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

#include <Eigen/SparseCore>
#include <string>

#include "qre/expr.hpp"

namespace qre {

enum class Sense { kMinimize, kMaximize };

// Objective + affine equalities + PSD / nonnegativity memberships over
// real scalar variables. Construction is single-threaded per instance;
// a finished program is immutable from the solver's point of view.
class ConicProgram {
 public:
  int num_vars() const { return num_vars_; }
  int add_var();

  // Hermitian matrix variable backed by n^2 fresh real scalars: n diagonal
  // entries and (re, im) pairs with coefficient matrices E_ij + E_ji and
  // i(E_ij - E_ji) for i < j.
  AffineMatrixExpr hermitian_var(int n);

  // Real symmetric matrix variable (n(n+1)/2 scalars); used instead of
  // hermitian_var when the surrounding data is real-valued.
  AffineMatrixExpr symmetric_var(int n);

  void add_psd(AffineMatrixExpr block, std::string tag = {});
  void add_eq(AffineScalar expr_minus_rhs);           // expr == 0
  void add_eq(const AffineMatrixExpr& lhs, const Mat& rhs);  // entrywise
  void add_nonneg(int var);
  void set_objective(AffineScalar obj, Sense sense);

  struct PsdBlock {
    AffineMatrixExpr expr;
    std::string tag;
  };

  const std::vector<PsdBlock>& psd_blocks() const { return psd_; }
  const std::vector<AffineScalar>& equalities() const { return eqs_; }
  const std::vector<int>& nonneg_vars() const { return nonneg_; }
  const AffineScalar& objective() const { return objective_; }
  Sense sense() const { return sense_; }

 private:
  int num_vars_ = 0;
  AffineScalar objective_;
  Sense sense_ = Sense::kMinimize;
  std::vector<PsdBlock> psd_;
  std::vector<AffineScalar> eqs_;
  std::vector<int> nonneg_;
};

// Real-embedded standard form: min c'x s.t. A x = b and, per block,
// F0 + sum_l x_l F_l >= 0 (real symmetric). Hermitian blocks with nonzero
// imaginary parts are embedded as [[Re,-Im],[Im,Re]], doubling their size;
// real-valued blocks keep their size.
struct RealSdp {
  struct Entry {
    int i, j;   // upper triangle, i <= j
    double v;
  };
  struct Block {
    int size = 0;
    bool diagonal = false;
    RMat f0;
    std::vector<int> vars;                    // global variable ids
    std::vector<std::vector<Entry>> coeff;    // parallel to vars
  };

  int num_vars = 0;
  RVec c;
  double obj_constant = 0.0;
  bool maximize = false;
  std::vector<Eigen::Triplet<double>> a_entries;  // rows of A
  int num_eqs = 0;
  RVec b;
  std::vector<Block> blocks;
};

RealSdp realize(const ConicProgram& prog);

}  // namespace qre
