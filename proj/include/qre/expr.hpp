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

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "qre/qmat.hpp"

namespace qre {

// Real affine functional of the scalar decision variables.
struct AffineScalar {
  double constant = 0.0;
  std::map<int, double> coeffs;

  double evaluate(std::span<const double> x) const;

  AffineScalar& operator+=(const AffineScalar& o);
  AffineScalar& operator-=(const AffineScalar& o);
  AffineScalar& operator*=(double s);
  friend AffineScalar operator+(AffineScalar a, const AffineScalar& b) {
    return a += b;
  }
  friend AffineScalar operator-(AffineScalar a, const AffineScalar& b) {
    return a -= b;
  }
  friend AffineScalar operator*(double s, AffineScalar a) { return a *= s; }
};

// Hermitian-matrix-valued affine expression: constant + sum_l x_l C_l with
// every C_l Hermitian, so any real assignment evaluates to a Hermitian
// matrix. Closed under the linear superoperators below.
class AffineMatrixExpr {
 public:
  AffineMatrixExpr() = default;
  explicit AffineMatrixExpr(Mat constant);
  AffineMatrixExpr(int dim, Mat constant, std::map<int, Mat> coeffs);

  int dim() const { return dim_; }
  const Mat& constant() const { return constant_; }
  const std::map<int, Mat>& coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.empty(); }

  Mat evaluate(std::span<const double> x) const;

  AffineScalar trace() const;
  // Re Tr[W X]; exact Tr[W X] when W is Hermitian.
  AffineScalar weighted_trace(const Mat& w) const;
  AffineScalar entry_real(int i, int j) const;
  AffineScalar entry_imag(int i, int j) const;

  AffineMatrixExpr& operator+=(const AffineMatrixExpr& o);
  AffineMatrixExpr& operator-=(const AffineMatrixExpr& o);
  AffineMatrixExpr& operator*=(double s);
  friend AffineMatrixExpr operator+(AffineMatrixExpr a, const AffineMatrixExpr& b) {
    return a += b;
  }
  friend AffineMatrixExpr operator-(AffineMatrixExpr a, const AffineMatrixExpr& b) {
    return a -= b;
  }
  friend AffineMatrixExpr operator*(double s, AffineMatrixExpr a) { return a *= s; }

 private:
  int dim_ = 0;
  Mat constant_;
  std::map<int, Mat> coeffs_;
};

// Applies a Hermiticity-preserving linear map to constant and coefficients.
AffineMatrixExpr transform(const AffineMatrixExpr& e,
                           const std::function<Mat(const Mat&)>& op, int out_dim);

AffineMatrixExpr partial_trace(const AffineMatrixExpr& e, int sys,
                               const std::vector<int>& dims);
AffineMatrixExpr partial_transpose(const AffineMatrixExpr& e, int sys,
                                   const std::vector<int>& dims);
AffineMatrixExpr system_exchange(const AffineMatrixExpr& e, int sys_a, int sys_b,
                                 const std::vector<int>& dims);
AffineMatrixExpr kron_left(const Mat& a, const AffineMatrixExpr& e);
AffineMatrixExpr kron_right(const AffineMatrixExpr& e, const Mat& b);
// U X U* for a constant isometry U (rows >= cols).
AffineMatrixExpr conjugate(const Mat& u, const AffineMatrixExpr& e);
// Entrywise complex conjugate (= transpose on Hermitian values).
AffineMatrixExpr conj(const AffineMatrixExpr& e);
// Tr_in[J (rho^T (x) I_out)] applied to a Choi-matrix expression.
AffineMatrixExpr apply_choi(const AffineMatrixExpr& j, const Mat& rho,
                            int dim_in, int dim_out);

// [[A, B],[B*, C]] as a (na+nc) x (na+nc) Hermitian expression; B must be
// Hermitian-valued so the assembled block is too.
AffineMatrixExpr block2x2(const AffineMatrixExpr& a, const AffineMatrixExpr& b,
                          const AffineMatrixExpr& c);

}  // namespace qre
