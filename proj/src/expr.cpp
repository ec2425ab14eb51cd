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

#include "qre/expr.hpp"

namespace qre {

double AffineScalar::evaluate(std::span<const double> x) const {
  double v = constant;
  for (const auto& [id, c] : coeffs) v += c * x[id];
  return v;
}

AffineScalar& AffineScalar::operator+=(const AffineScalar& o) {
  constant += o.constant;
  for (const auto& [id, c] : o.coeffs) coeffs[id] += c;
  return *this;
}

AffineScalar& AffineScalar::operator-=(const AffineScalar& o) {
  constant -= o.constant;
  for (const auto& [id, c] : o.coeffs) coeffs[id] -= c;
  return *this;
}

AffineScalar& AffineScalar::operator*=(double s) {
  constant *= s;
  for (auto& [id, c] : coeffs) c *= s;
  return *this;
}

AffineMatrixExpr::AffineMatrixExpr(Mat constant)
    : dim_(static_cast<int>(constant.rows())), constant_(std::move(constant)) {
  if (constant_.rows() != constant_.cols())
    throw std::invalid_argument("expression constant must be square");
}

AffineMatrixExpr::AffineMatrixExpr(int dim, Mat constant, std::map<int, Mat> coeffs)
    : dim_(dim), constant_(std::move(constant)), coeffs_(std::move(coeffs)) {}

Mat AffineMatrixExpr::evaluate(std::span<const double> x) const {
  Mat v = constant_;
  for (const auto& [id, c] : coeffs_) v += x[id] * c;
  return v;
}

AffineScalar AffineMatrixExpr::trace() const {
  AffineScalar s;
  s.constant = constant_.trace().real();
  for (const auto& [id, c] : coeffs_) s.coeffs[id] += c.trace().real();
  return s;
}

AffineScalar AffineMatrixExpr::weighted_trace(const Mat& w) const {
  AffineScalar s;
  s.constant = (w * constant_).trace().real();
  for (const auto& [id, c] : coeffs_) s.coeffs[id] += (w * c).trace().real();
  return s;
}

AffineScalar AffineMatrixExpr::entry_real(int i, int j) const {
  AffineScalar s;
  s.constant = constant_(i, j).real();
  for (const auto& [id, c] : coeffs_) {
    double v = c(i, j).real();
    if (v != 0.0) s.coeffs[id] += v;
  }
  return s;
}

AffineScalar AffineMatrixExpr::entry_imag(int i, int j) const {
  AffineScalar s;
  s.constant = constant_(i, j).imag();
  for (const auto& [id, c] : coeffs_) {
    double v = c(i, j).imag();
    if (v != 0.0) s.coeffs[id] += v;
  }
  return s;
}

AffineMatrixExpr& AffineMatrixExpr::operator+=(const AffineMatrixExpr& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("expression dim mismatch");
  constant_ += o.constant_;
  for (const auto& [id, c] : o.coeffs_) {
    auto it = coeffs_.find(id);
    if (it == coeffs_.end())
      coeffs_.emplace(id, c);
    else
      it->second += c;
  }
  return *this;
}

AffineMatrixExpr& AffineMatrixExpr::operator-=(const AffineMatrixExpr& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("expression dim mismatch");
  constant_ -= o.constant_;
  for (const auto& [id, c] : o.coeffs_) {
    auto it = coeffs_.find(id);
    if (it == coeffs_.end())
      coeffs_.emplace(id, -c);
    else
      it->second -= c;
  }
  return *this;
}

AffineMatrixExpr& AffineMatrixExpr::operator*=(double s) {
  constant_ *= s;
  for (auto& [id, c] : coeffs_) c *= s;
  return *this;
}

AffineMatrixExpr transform(const AffineMatrixExpr& e,
                           const std::function<Mat(const Mat&)>& op, int out_dim) {
  std::map<int, Mat> coeffs;
  for (const auto& [id, c] : e.coeffs()) coeffs.emplace(id, op(c));
  return AffineMatrixExpr(out_dim, op(e.constant()), std::move(coeffs));
}

AffineMatrixExpr partial_trace(const AffineMatrixExpr& e, int sys,
                               const std::vector<int>& dims) {
  int out = e.dim() / dims[sys - 1];
  return transform(
      e, [&](const Mat& m) { return partial_trace(m, sys, dims); }, out);
}

AffineMatrixExpr partial_transpose(const AffineMatrixExpr& e, int sys,
                                   const std::vector<int>& dims) {
  return transform(
      e, [&](const Mat& m) { return partial_transpose(m, sys, dims); }, e.dim());
}

AffineMatrixExpr system_exchange(const AffineMatrixExpr& e, int sys_a, int sys_b,
                                 const std::vector<int>& dims) {
  return transform(
      e, [&](const Mat& m) { return system_exchange(m, sys_a, sys_b, dims); },
      e.dim());
}

AffineMatrixExpr kron_left(const Mat& a, const AffineMatrixExpr& e) {
  int out = static_cast<int>(a.rows()) * e.dim();
  return transform(e, [&](const Mat& m) { return kron(a, m); }, out);
}

AffineMatrixExpr kron_right(const AffineMatrixExpr& e, const Mat& b) {
  int out = static_cast<int>(b.rows()) * e.dim();
  return transform(e, [&](const Mat& m) { return kron(m, b); }, out);
}

AffineMatrixExpr conjugate(const Mat& u, const AffineMatrixExpr& e) {
  int out = static_cast<int>(u.rows());
  return transform(e, [&](const Mat& m) { return Mat(u * m * u.adjoint()); }, out);
}

AffineMatrixExpr conj(const AffineMatrixExpr& e) {
  return transform(e, [](const Mat& m) { return Mat(m.conjugate()); }, e.dim());
}

AffineMatrixExpr apply_choi(const AffineMatrixExpr& j, const Mat& rho,
                            int dim_in, int dim_out) {
  return transform(
      j, [&](const Mat& m) { return apply_choi(m, rho, dim_in, dim_out); },
      dim_out);
}

AffineMatrixExpr block2x2(const AffineMatrixExpr& a, const AffineMatrixExpr& b,
                          const AffineMatrixExpr& c) {
  int na = a.dim(), nc = c.dim();
  if (b.dim() != na || na != nc)
    throw std::invalid_argument("block2x2 expects equal square blocks");
  int n = na + nc;
  auto place = [&](const Mat& ma, const Mat& mb, const Mat& mc) {
    Mat out = Mat::Zero(n, n);
    out.topLeftCorner(na, na) = ma;
    out.topRightCorner(na, nc) = mb;
    out.bottomLeftCorner(nc, na) = mb.adjoint();
    out.bottomRightCorner(nc, nc) = mc;
    return out;
  };
  Mat z = Mat::Zero(na, na);
  std::map<int, Mat> coeffs;
  auto add = [&](int id, const Mat& m) {
    auto it = coeffs.find(id);
    if (it == coeffs.end())
      coeffs.emplace(id, m);
    else
      it->second += m;
  };
  for (const auto& [id, m] : a.coeffs()) add(id, place(m, z, z));
  for (const auto& [id, m] : b.coeffs()) add(id, place(z, m, z));
  for (const auto& [id, m] : c.coeffs()) add(id, place(z, z, m));
  return AffineMatrixExpr(n, place(a.constant(), b.constant(), c.constant()),
                          std::move(coeffs));
}

}  // namespace qre
