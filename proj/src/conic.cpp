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

#include "qre/conic.hpp"

namespace qre {

namespace {
constexpr double kDropTol = 1e-14;
}

int ConicProgram::add_var() { return num_vars_++; }

AffineMatrixExpr ConicProgram::hermitian_var(int n) {
  if (n < 1) throw std::invalid_argument("variable dimension must be >= 1");
  std::map<int, Mat> coeffs;
  for (int i = 0; i < n; ++i) {
    Mat e = Mat::Zero(n, n);
    e(i, i) = 1.0;
    coeffs.emplace(add_var(), std::move(e));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat re = Mat::Zero(n, n);
      re(i, j) = 1.0;
      re(j, i) = 1.0;
      coeffs.emplace(add_var(), std::move(re));
      Mat im = Mat::Zero(n, n);
      im(i, j) = cxd(0, 1);
      im(j, i) = cxd(0, -1);
      coeffs.emplace(add_var(), std::move(im));
    }
  return AffineMatrixExpr(n, Mat::Zero(n, n), std::move(coeffs));
}

AffineMatrixExpr ConicProgram::symmetric_var(int n) {
  if (n < 1) throw std::invalid_argument("variable dimension must be >= 1");
  std::map<int, Mat> coeffs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat e = Mat::Zero(n, n);
      e(i, j) = 1.0;
      e(j, i) = 1.0;
      coeffs.emplace(add_var(), std::move(e));
    }
  return AffineMatrixExpr(n, Mat::Zero(n, n), std::move(coeffs));
}

void ConicProgram::add_psd(AffineMatrixExpr block, std::string tag) {
  for (const auto& [id, c] : block.coeffs())
    if (id < 0 || id >= num_vars_)
      throw std::invalid_argument("PSD block references unknown variable");
  psd_.push_back({std::move(block), std::move(tag)});
}

void ConicProgram::add_eq(AffineScalar e) {
  for (const auto& [id, c] : e.coeffs)
    if (id < 0 || id >= num_vars_)
      throw std::invalid_argument("equality references unknown variable");
  eqs_.push_back(std::move(e));
}

void ConicProgram::add_eq(const AffineMatrixExpr& lhs, const Mat& rhs) {
  if (lhs.dim() != rhs.rows() || rhs.rows() != rhs.cols())
    throw std::invalid_argument("matrix equality dimension mismatch");
  for (int i = 0; i < lhs.dim(); ++i) {
    AffineScalar d = lhs.entry_real(i, i);
    d.constant -= rhs(i, i).real();
    add_eq(d);
    for (int j = i + 1; j < lhs.dim(); ++j) {
      AffineScalar re = lhs.entry_real(i, j);
      re.constant -= rhs(i, j).real();
      add_eq(re);
      AffineScalar im = lhs.entry_imag(i, j);
      im.constant -= rhs(i, j).imag();
      add_eq(im);
    }
  }
}

void ConicProgram::add_nonneg(int var) {
  if (var < 0 || var >= num_vars_)
    throw std::invalid_argument("nonneg references unknown variable");
  nonneg_.push_back(var);
}

void ConicProgram::set_objective(AffineScalar obj, Sense sense) {
  objective_ = std::move(obj);
  sense_ = sense;
}

namespace {

bool is_real(const AffineMatrixExpr& e) {
  if (e.constant().imag().cwiseAbs().maxCoeff() > kDropTol) return false;
  for (const auto& [id, c] : e.coeffs())
    if (c.imag().cwiseAbs().maxCoeff() > kDropTol) return false;
  return true;
}

std::vector<RealSdp::Entry> sparsify(const RMat& m) {
  std::vector<RealSdp::Entry> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > kDropTol) out.push_back({i, j, m(i, j)});
  return out;
}

}  // namespace

RealSdp realize(const ConicProgram& prog) {
  RealSdp sdp;
  sdp.num_vars = prog.num_vars();
  sdp.maximize = prog.sense() == Sense::kMaximize;
  sdp.c = RVec::Zero(sdp.num_vars);
  double sgn = sdp.maximize ? -1.0 : 1.0;
  sdp.obj_constant = prog.objective().constant;
  for (const auto& [id, v] : prog.objective().coeffs) sdp.c(id) = sgn * v;

  sdp.num_eqs = static_cast<int>(prog.equalities().size());
  sdp.b = RVec::Zero(sdp.num_eqs);
  for (int r = 0; r < sdp.num_eqs; ++r) {
    const AffineScalar& e = prog.equalities()[r];
    sdp.b(r) = -e.constant;
    for (const auto& [id, v] : e.coeffs)
      if (std::abs(v) > kDropTol) sdp.a_entries.emplace_back(r, id, v);
  }

  for (const auto& pb : prog.psd_blocks()) {
    RealSdp::Block blk;
    if (is_real(pb.expr)) {
      blk.size = pb.expr.dim();
      blk.f0 = pb.expr.constant().real();
      for (const auto& [id, c] : pb.expr.coeffs()) {
        auto entries = sparsify(c.real());
        if (entries.empty()) continue;
        blk.vars.push_back(id);
        blk.coeff.push_back(std::move(entries));
      }
    } else {
      blk.size = 2 * pb.expr.dim();
      blk.f0 = real_embedding(pb.expr.constant());
      for (const auto& [id, c] : pb.expr.coeffs()) {
        auto entries = sparsify(real_embedding(c));
        if (entries.empty()) continue;
        blk.vars.push_back(id);
        blk.coeff.push_back(std::move(entries));
      }
    }
    sdp.blocks.push_back(std::move(blk));
  }

  if (!prog.nonneg_vars().empty()) {
    RealSdp::Block blk;
    blk.size = static_cast<int>(prog.nonneg_vars().size());
    blk.diagonal = true;
    blk.f0 = RMat::Zero(blk.size, blk.size);
    int pos = 0;
    for (int id : prog.nonneg_vars()) {
      blk.vars.push_back(id);
      blk.coeff.push_back({{pos, pos, 1.0}});
      ++pos;
    }
    sdp.blocks.push_back(std::move(blk));
  }
  return sdp;
}

}  // namespace qre
