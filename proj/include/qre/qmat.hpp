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

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qre {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using cxd = std::complex<double>;

// All multipartite operations use 1-based subsystem indices with the
// leftmost tensor factor varying slowest (row-major composite index),
// i.e. the basis of dims [na nb] is |a,b> at index a*nb + b.

Mat kron(const Mat& a, const Mat& b);
Mat partial_trace(const Mat& x, int sys, const std::vector<int>& dims);
Mat partial_transpose(const Mat& x, int sys, const std::vector<int>& dims);
Mat system_exchange(const Mat& x, int sys_a, int sys_b,
                    const std::vector<int>& dims);

// [[Re H, -Im H],[Im H, Re H]]; PSD iff H is, each eigenvalue doubled.
RMat real_embedding(const Mat& h);

// Hermitian matrix with symmetry enforced at construction (tolerance 1e-12).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Mat m);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& mat() const { return m_; }

 private:
  Mat m_;
};

// Unit-trace PSD matrix with subsystem dimension metadata.
class DensityMatrix {
 public:
  DensityMatrix(Mat m, std::vector<int> dims);
  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& mat() const { return m_; }
  const std::vector<int>& dims() const { return dims_; }

 private:
  Mat m_;
  std::vector<int> dims_;
};

// CPTP map in Stinespring, Kraus or Choi representation.
// Choi convention: J = sum_{ij} |i><j|_in (x) Phi(|i><j|), unnormalized.
class QuantumChannel {
 public:
  static QuantumChannel stinespring(Mat u, int dim_out, int dim_env);
  static QuantumChannel kraus(std::vector<Mat> ops);
  static QuantumChannel choi(Mat j, int dim_in, int dim_out);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  int dim_env() const { return dim_env_; }  // 0 unless Stinespring

  const Mat& isometry() const;
  std::vector<Mat> kraus_ops() const;
  Mat choi_matrix() const;

  // Phi(rho) = Tr_E[U rho U*] (resp. Kraus/Choi application).
  Mat apply(const Mat& rho) const;
  // Complementary channel output Tr_B[U rho U*]; Stinespring only.
  Mat apply_complementary(const Mat& rho) const;

 private:
  QuantumChannel() = default;
  enum class Rep { kStinespring, kKraus, kChoi } rep_ = Rep::kKraus;
  Mat u_, j_;
  std::vector<Mat> kraus_;
  int dim_in_ = 0, dim_out_ = 0, dim_env_ = 0;
};

// U rho U* with dims [dim_out, dim_env]; U must be a Stinespring channel.
DensityMatrix apply_isometry(const QuantumChannel& ch, const DensityMatrix& rho);

// Lambda(rho) = Tr_in[J (rho^T (x) I_out)].
Mat apply_choi(const Mat& j, const Mat& rho, int dim_in, int dim_out);

// Eigenvalues of nominally-PSD matrices: values in (-1e-9, 0) are clamped
// to zero, anything more negative throws std::domain_error.
RVec clamped_eigenvalues(const Mat& h);

// von Neumann entropy -Tr[rho log rho], in nats.
double entropy_exact(const Mat& rho);
double entropy_exact(const DensityMatrix& rho);

// Quantum relative entropy Tr[rho(log rho - log sigma)] in nats;
// +inf when supp(rho) is not contained in supp(sigma).
double rel_entr_exact(const Mat& rho, const Mat& sigma);

DensityMatrix random_density(int n, int rank, unsigned seed);
DensityMatrix random_pure(const std::vector<int>& dims, unsigned seed);

constexpr double kNats2Bits = 1.4426950408889634;  // 1/log(2)

}  // namespace qre
