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
#include <numeric>
#include <random>

namespace qre {

namespace {

int product(const std::vector<int>& dims) {
  int p = 1;
  for (int d : dims) p *= d;
  return p;
}

void check_dims(const Mat& x, const std::vector<int>& dims) {
  if (x.rows() != x.cols())
    throw std::invalid_argument("matrix must be square");
  if (product(dims) != x.rows())
    throw std::invalid_argument("product of subsystem dims != matrix dim");
}

void check_sys(int sys, size_t nsys) {
  if (sys < 1 || static_cast<size_t>(sys) > nsys)
    throw std::invalid_argument("subsystem index out of range");
}

// Composite index <-> (left, s, right) split around subsystem `sys`.
struct Split {
  int left, mid, right;  // dims of the three groups (left/right may be 1)
  explicit Split(const std::vector<int>& dims, int sys) {
    left = 1;
    for (int i = 0; i < sys - 1; ++i) left *= dims[i];
    mid = dims[sys - 1];
    right = 1;
    for (size_t i = sys; i < dims.size(); ++i) right *= dims[i];
  }
  int index(int l, int m, int r) const { return (l * mid + m) * right + r; }
};

}  // namespace

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat partial_trace(const Mat& x, int sys, const std::vector<int>& dims) {
  check_dims(x, dims);
  check_sys(sys, dims.size());
  Split sp(dims, sys);
  int nout = sp.left * sp.right;
  Mat out = Mat::Zero(nout, nout);
  for (int l = 0; l < sp.left; ++l)
    for (int r = 0; r < sp.right; ++r)
      for (int l2 = 0; l2 < sp.left; ++l2)
        for (int r2 = 0; r2 < sp.right; ++r2) {
          cxd s = 0;
          for (int m = 0; m < sp.mid; ++m)
            s += x(sp.index(l, m, r), sp.index(l2, m, r2));
          out(l * sp.right + r, l2 * sp.right + r2) = s;
        }
  return out;
}

Mat partial_transpose(const Mat& x, int sys, const std::vector<int>& dims) {
  check_dims(x, dims);
  check_sys(sys, dims.size());
  Split sp(dims, sys);
  Mat out(x.rows(), x.cols());
  for (int l = 0; l < sp.left; ++l)
    for (int r = 0; r < sp.right; ++r)
      for (int l2 = 0; l2 < sp.left; ++l2)
        for (int r2 = 0; r2 < sp.right; ++r2)
          for (int m = 0; m < sp.mid; ++m)
            for (int m2 = 0; m2 < sp.mid; ++m2)
              out(sp.index(l, m2, r), sp.index(l2, m, r2)) =
                  x(sp.index(l, m, r), sp.index(l2, m2, r2));
  return out;
}

Mat system_exchange(const Mat& x, int sys_a, int sys_b,
                    const std::vector<int>& dims) {
  check_dims(x, dims);
  check_sys(sys_a, dims.size());
  check_sys(sys_b, dims.size());
  int n = static_cast<int>(x.rows());
  size_t nsys = dims.size();
  // Permutation of composite basis indices swapping factors sys_a, sys_b.
  std::vector<int> perm(n);
  std::vector<int> sub(nsys);
  std::vector<int> newdims(dims);
  std::swap(newdims[sys_a - 1], newdims[sys_b - 1]);
  for (int idx = 0; idx < n; ++idx) {
    int rem = idx;
    for (int s = static_cast<int>(nsys) - 1; s >= 0; --s) {
      sub[s] = rem % dims[s];
      rem /= dims[s];
    }
    std::swap(sub[sys_a - 1], sub[sys_b - 1]);
    int out = 0;
    for (size_t s = 0; s < nsys; ++s) out = out * newdims[s] + sub[s];
    perm[idx] = out;
  }
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(perm[i], perm[j]) = x(i, j);
  return out;
}

RMat real_embedding(const Mat& h) {
  int n = static_cast<int>(h.rows());
  RMat out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return out;
}

HermitianMatrix::HermitianMatrix(Mat m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("Hermitian matrix must be square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("matrix is not Hermitian within 1e-12");
  m_ = 0.5 * (m + m.adjoint().eval());
}

DensityMatrix::DensityMatrix(Mat m, std::vector<int> dims)
    : m_(std::move(m)), dims_(std::move(dims)) {
  check_dims(m_, dims_);
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("density matrix is not Hermitian");
  m_ = 0.5 * (m_ + m_.adjoint().eval());
  if (std::abs(m_.trace().real() - 1.0) > 1e-9)
    throw std::invalid_argument("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("density matrix has negative eigenvalue");
}

QuantumChannel QuantumChannel::stinespring(Mat u, int dim_out, int dim_env) {
  if (u.rows() != static_cast<long>(dim_out) * dim_env)
    throw std::invalid_argument("isometry rows != dim_out*dim_env");
  Mat g = u.adjoint() * u;
  if ((g - Mat::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("U*U != I: not an isometry");
  QuantumChannel ch;
  ch.rep_ = Rep::kStinespring;
  ch.u_ = std::move(u);
  ch.dim_in_ = static_cast<int>(ch.u_.cols());
  ch.dim_out_ = dim_out;
  ch.dim_env_ = dim_env;
  return ch;
}

QuantumChannel QuantumChannel::kraus(std::vector<Mat> ops) {
  if (ops.empty()) throw std::invalid_argument("empty Kraus list");
  int din = static_cast<int>(ops[0].cols());
  int dout = static_cast<int>(ops[0].rows());
  Mat s = Mat::Zero(din, din);
  for (const Mat& a : ops) {
    if (a.cols() != din || a.rows() != dout)
      throw std::invalid_argument("inconsistent Kraus dimensions");
    s += a.adjoint() * a;
  }
  if ((s - Mat::Identity(din, din)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("sum A_i* A_i != I");
  QuantumChannel ch;
  ch.rep_ = Rep::kKraus;
  ch.kraus_ = std::move(ops);
  ch.dim_in_ = din;
  ch.dim_out_ = dout;
  return ch;
}

QuantumChannel QuantumChannel::choi(Mat j, int dim_in, int dim_out) {
  if (j.rows() != static_cast<long>(dim_in) * dim_out)
    throw std::invalid_argument("Choi matrix dim != dim_in*dim_out");
  Mat tr_out = partial_trace(j, 2, {dim_in, dim_out});
  if ((tr_out - Mat::Identity(dim_in, dim_in)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("Tr_out J != I: not trace-preserving");
  Eigen::SelfAdjointEigenSolver<Mat> es(j, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("Choi matrix not PSD: not completely positive");
  QuantumChannel ch;
  ch.rep_ = Rep::kChoi;
  ch.j_ = std::move(j);
  ch.dim_in_ = dim_in;
  ch.dim_out_ = dim_out;
  return ch;
}

const Mat& QuantumChannel::isometry() const {
  if (rep_ != Rep::kStinespring)
    throw std::logic_error("channel has no Stinespring representation");
  return u_;
}

std::vector<Mat> QuantumChannel::kraus_ops() const {
  switch (rep_) {
    case Rep::kKraus:
      return kraus_;
    case Rep::kStinespring: {
      // A_e[b,a] = U[(b,e),a] in the [dim_out, dim_env] ordering.
      std::vector<Mat> ops(dim_env_, Mat::Zero(dim_out_, dim_in_));
      for (int e = 0; e < dim_env_; ++e)
        for (int b = 0; b < dim_out_; ++b)
          for (int a = 0; a < dim_in_; ++a)
            ops[e](b, a) = u_(b * dim_env_ + e, a);
      return ops;
    }
    case Rep::kChoi: {
      Eigen::SelfAdjointEigenSolver<Mat> es(j_);
      std::vector<Mat> ops;
      for (int i = 0; i < j_.rows(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam < 1e-12) continue;
        // vec v with v[(a,b)] -> A[b,a]*sqrt(lam)
        Mat a(dim_out_, dim_in_);
        for (int in = 0; in < dim_in_; ++in)
          for (int out = 0; out < dim_out_; ++out)
            a(out, in) = std::sqrt(lam) * es.eigenvectors()(in * dim_out_ + out, i);
        ops.push_back(a);
      }
      return ops;
    }
  }
  throw std::logic_error("unreachable");
}

Mat QuantumChannel::choi_matrix() const {
  if (rep_ == Rep::kChoi) return j_;
  std::vector<Mat> ops = kraus_ops();
  Mat j = Mat::Zero(static_cast<long>(dim_in_) * dim_out_,
                    static_cast<long>(dim_in_) * dim_out_);
  for (const Mat& a : ops) {
    for (int i = 0; i < dim_in_; ++i)
      for (int jj = 0; jj < dim_in_; ++jj) {
        // block (i,jj) += A |i><jj| A*
        for (int r = 0; r < dim_out_; ++r)
          for (int c = 0; c < dim_out_; ++c)
            j(i * dim_out_ + r, jj * dim_out_ + c) += a(r, i) * std::conj(a(c, jj));
      }
  }
  return j;
}

Mat QuantumChannel::apply(const Mat& rho) const {
  if (rho.rows() != dim_in_)
    throw std::invalid_argument("channel input dimension mismatch");
  switch (rep_) {
    case Rep::kStinespring: {
      Mat big = u_ * rho * u_.adjoint();
      return partial_trace(big, 2, {dim_out_, dim_env_});
    }
    case Rep::kKraus: {
      Mat out = Mat::Zero(dim_out_, dim_out_);
      for (const Mat& a : kraus_) out += a * rho * a.adjoint();
      return out;
    }
    case Rep::kChoi:
      return apply_choi(j_, rho, dim_in_, dim_out_);
  }
  throw std::logic_error("unreachable");
}

Mat QuantumChannel::apply_complementary(const Mat& rho) const {
  if (rep_ != Rep::kStinespring)
    throw std::logic_error("complementary channel needs Stinespring form");
  Mat big = u_ * rho * u_.adjoint();
  return partial_trace(big, 1, {dim_out_, dim_env_});
}

DensityMatrix apply_isometry(const QuantumChannel& ch, const DensityMatrix& rho) {
  const Mat& u = ch.isometry();
  if (ch.dim_in() != rho.dim())
    throw std::invalid_argument("isometry input dimension mismatch");
  return DensityMatrix(u * rho.mat() * u.adjoint(),
                       {ch.dim_out(), ch.dim_env()});
}

Mat apply_choi(const Mat& j, const Mat& rho, int dim_in, int dim_out) {
  if (j.rows() != static_cast<long>(dim_in) * dim_out || rho.rows() != dim_in)
    throw std::invalid_argument("apply_choi dimension mismatch");
  Mat lifted = kron(rho.transpose(), Mat::Identity(dim_out, dim_out)) * j;
  return partial_trace(lifted, 1, {dim_in, dim_out});
}

RVec clamped_eigenvalues(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  RVec ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < 0) {
      if (ev(i) < -1e-9)
        throw std::domain_error("matrix eigenvalue below -1e-9; not PSD");
      ev(i) = 0;
    }
  }
  return ev;
}

double entropy_exact(const Mat& rho) {
  RVec ev = clamped_eigenvalues(rho);
  double h = 0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > 0) h -= ev(i) * std::log(ev(i));
  return h;
}

double entropy_exact(const DensityMatrix& rho) { return entropy_exact(rho.mat()); }

double rel_entr_exact(const Mat& rho, const Mat& sigma) {
  if (rho.rows() != sigma.rows())
    throw std::invalid_argument("rel_entr dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Mat> er(rho), es(sigma);
  RVec lr = er.eigenvalues(), ls = es.eigenvalues();
  const double thresh = 1e-10;
  // support check: supp(rho) must lie in supp(sigma)
  for (int i = 0; i < lr.size(); ++i) {
    if (lr(i) <= thresh) continue;
    const Vec vi = er.eigenvectors().col(i);
    double outside = 0;
    for (int j = 0; j < ls.size(); ++j)
      if (ls(j) <= thresh)
        outside += std::norm(es.eigenvectors().col(j).dot(vi));
    if (outside > 1e-9) return std::numeric_limits<double>::infinity();
  }
  double d = 0;
  for (int i = 0; i < lr.size(); ++i)
    if (lr(i) > thresh) d += lr(i) * std::log(lr(i));
  for (int i = 0; i < lr.size(); ++i) {
    const Vec vi = er.eigenvectors().col(i);
    double pi = lr(i) < 0 ? 0 : lr(i);
    for (int j = 0; j < ls.size(); ++j) {
      if (ls(j) <= thresh) continue;
      double w = std::norm(es.eigenvectors().col(j).dot(vi));
      d -= pi * w * std::log(ls(j));
    }
  }
  return d;
}

DensityMatrix random_density(int n, int rank, unsigned seed) {
  if (rank < 1 || rank > n) throw std::invalid_argument("invalid rank");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Mat g(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = cxd(nd(gen), nd(gen));
  Mat m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(m, {n});
}

DensityMatrix random_pure(const std::vector<int>& dims, unsigned seed) {
  int n = product(dims);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec psi(n);
  for (int i = 0; i < n; ++i) psi(i) = cxd(nd(gen), nd(gen));
  psi.normalize();
  return DensityMatrix(psi * psi.adjoint(), dims);
}

}  // namespace qre
