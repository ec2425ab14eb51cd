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

#include "qre/entrcones.hpp"

#include <cmath>

namespace qre {

namespace {

bool expr_is_real(const AffineMatrixExpr& e) {
  if (e.constant().imag().cwiseAbs().maxCoeff() > 1e-13) return false;
  for (const auto& [id, c] : e.coeffs())
    if (c.imag().cwiseAbs().maxCoeff() > 1e-13) return false;
  return true;
}

AffineMatrixExpr matrix_var(ConicProgram& prog, int n, bool real_only) {
  return real_only ? prog.symmetric_var(n) : prog.hermitian_var(n);
}

// Shared ladder + node-block machinery.
//
// Ladder: G_0 = Y, then [[X, G_i],[G_i, G_{i-1}]] >= 0 for i = 1..k, so
// that G_k is bounded by the weighted geometric mean X #_{2^-k} Y.
//
// Node j imposes S_j <= P_j := (1/t_j) X - (1/t_j) X C_j^{-1} X with
// C_j = t_j G_k + (1-t_j) X via the Schur block
//   [[ X/t_j - S_j,  X/sqrt(t_j) ], [ X/sqrt(t_j),  C_j ]] >= 0.
// P_j is the matrix perspective of y -> (y-1)/(t_j(y-1)+1) at (X, G_k),
// so -2^k sum_j w_j S_j dominates D_op(X, Y) in the (m,k) approximation.
struct LadderResult {
  AffineMatrixExpr g_top;  // G_k
};

LadderResult build_ladder(ConicProgram& prog, const AffineMatrixExpr& x,
                          const AffineMatrixExpr& y, int k, bool real_only,
                          std::vector<int>& block_dims) {
  int n = x.dim();
  AffineMatrixExpr g_prev = y;
  for (int i = 0; i < k; ++i) {
    AffineMatrixExpr g = matrix_var(prog, n, real_only);
    prog.add_psd(block2x2(x, g, g_prev), "geomean_ladder");
    block_dims.push_back(2 * n);
    g_prev = g;
  }
  return {g_prev};
}

// Matrix-valued node blocks; returns T = -2^k sum_j w_j S_j.
AffineMatrixExpr build_nodes_matrix(ConicProgram& prog, const AffineMatrixExpr& x,
                                    const AffineMatrixExpr& g_top,
                                    const QuadratureScheme& q, bool real_only,
                                    std::vector<int>& block_dims) {
  int n = x.dim();
  AffineMatrixExpr t(Mat::Zero(n, n));
  double scale = std::ldexp(1.0, q.k);
  for (int j = 0; j < q.m; ++j) {
    double tj = q.nodes[j];
    AffineMatrixExpr s = matrix_var(prog, n, real_only);
    AffineMatrixExpr a = (1.0 / tj) * x - s;
    AffineMatrixExpr b = (1.0 / std::sqrt(tj)) * x;
    AffineMatrixExpr c = tj * g_top + (1.0 - tj) * x;
    prog.add_psd(block2x2(a, b, c), "quadrature_node");
    block_dims.push_back(2 * n);
    t -= (scale * q.weights[j]) * s;
  }
  return t;
}

// Node blocks compressed against a fixed vector v: scalar s_j with
//   [[ C_j, Xv ], [ (Xv)^*, v^*Xv - t_j s_j ]] >= 0,
// returns d = -2^k sum_j w_j s_j >= <v| D_op(X,Y) |v> in the approximation.
AffineScalar build_nodes_compressed(ConicProgram& prog, const AffineMatrixExpr& x,
                                    const AffineMatrixExpr& g_top, const Vec& v,
                                    const QuadratureScheme& q,
                                    std::vector<int>& block_dims) {
  int n = x.dim();
  AffineScalar d;
  double scale = std::ldexp(1.0, q.k);
  for (int j = 0; j < q.m; ++j) {
    double tj = q.nodes[j];
    int sj = prog.add_var();
    AffineMatrixExpr c = tj * g_top + (1.0 - tj) * x;

    auto corner_place = [&](const Mat& cm, const Mat& xm) {
      Mat out = Mat::Zero(n + 1, n + 1);
      out.topLeftCorner(n, n) = cm;
      Vec col = xm * v;
      out.block(0, n, n, 1) = col;
      out.block(n, 0, 1, n) = col.adjoint();
      out(n, n) = (v.adjoint() * xm * v)(0, 0);
      return out;
    };
    Mat zero_n = Mat::Zero(n, n);
    std::map<int, Mat> coeffs;
    auto add = [&](int id, const Mat& m) {
      auto it = coeffs.find(id);
      if (it == coeffs.end())
        coeffs.emplace(id, m);
      else
        it->second += m;
    };
    for (const auto& [id, cm] : c.coeffs()) add(id, corner_place(cm, zero_n));
    for (const auto& [id, xm] : x.coeffs()) add(id, corner_place(zero_n, xm));
    Mat sj_coeff = Mat::Zero(n + 1, n + 1);
    sj_coeff(n, n) = -tj;
    add(sj, sj_coeff);
    prog.add_psd(AffineMatrixExpr(n + 1, corner_place(c.constant(), x.constant()),
                                  std::move(coeffs)),
                 "quadrature_node_compressed");
    block_dims.push_back(n + 1);
    d.coeffs[sj] -= scale * q.weights[j];
  }
  return d;
}

}  // namespace

EntropyEpigraphHandle hypo_op_rel_entr(ConicProgram& prog,
                                       const AffineMatrixExpr& rho,
                                       const AffineMatrixExpr& sigma, int m,
                                       int k) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("op_rel_entr dimension mismatch");
  EntropyEpigraphHandle h;
  h.function = "op_rel_entr";
  h.m = m;
  h.k = k;
  h.n = rho.dim();
  QuadratureScheme q = QuadratureScheme::gauss_legendre_01(m, k);
  bool real_only = expr_is_real(rho) && expr_is_real(sigma);
  LadderResult lad = build_ladder(prog, rho, sigma, k, real_only, h.block_dims);
  h.matrix = build_nodes_matrix(prog, rho, lad.g_top, q, real_only, h.block_dims);
  return h;
}

EntropyEpigraphHandle hypo_quantum_entr(ConicProgram& prog,
                                        const AffineMatrixExpr& rho, int m,
                                        int k) {
  int n = rho.dim();
  AffineMatrixExpr eye{Mat::Identity(n, n)};
  EntropyEpigraphHandle h = hypo_op_rel_entr(prog, rho, eye, m, k);
  h.function = "quantum_entr";
  h.scalar = (-1.0) * h.matrix.trace();
  return h;
}

EntropyEpigraphHandle epi_trace_logm(ConicProgram& prog, const Mat& sigma,
                                     const AffineMatrixExpr& rho, int m, int k) {
  if (sigma.rows() != rho.dim() || sigma.cols() != rho.dim())
    throw std::invalid_argument("trace_logm dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Mat> es(sigma, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("trace_logm weight is not PSD");
  int n = rho.dim();
  AffineMatrixExpr eye{Mat::Identity(n, n)};
  // log X = -D_op(I, X); compress the trace against the fixed weight.
  EntropyEpigraphHandle h = hypo_op_rel_entr(prog, eye, rho, m, k);
  h.function = "trace_logm";
  h.scalar = (-1.0) * h.matrix.weighted_trace(sigma);
  h.matrix = AffineMatrixExpr{};
  return h;
}

EntropyEpigraphHandle epi_quantum_rel_entr(ConicProgram& prog,
                                           const AffineMatrixExpr& rho,
                                           const AffineMatrixExpr& sigma, int m,
                                           int k, bool force_variable) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("rel_entr dimension mismatch");
  int n = rho.dim();

  if (!force_variable && rho.is_constant()) {
    // D(rho||sigma) = Tr[rho log rho] - Tr[rho log sigma], first term exact.
    RVec ev = clamped_eigenvalues(rho.constant());
    double tr_rho_log_rho = 0;
    for (int i = 0; i < ev.size(); ++i)
      if (ev(i) > 0) tr_rho_log_rho += ev(i) * std::log(ev(i));
    EntropyEpigraphHandle h =
        epi_trace_logm(prog, rho.constant(), sigma, m, k);
    h.function = "quantum_rel_entr";
    h.scalar = (-1.0) * h.scalar;
    h.scalar.constant += tr_rho_log_rho;
    return h;
  }

  if (!force_variable && sigma.is_constant()) {
    // D(rho||sigma) = -H(rho) - Tr[rho log sigma], second term affine.
    Eigen::SelfAdjointEigenSolver<Mat> es(sigma.constant());
    if (es.eigenvalues().minCoeff() < 1e-12)
      throw std::invalid_argument(
          "quantum_rel_entr: constant second argument must be positive "
          "definite");
    Mat log_sigma = es.eigenvectors() *
                    es.eigenvalues().array().log().matrix().asDiagonal() *
                    es.eigenvectors().adjoint();
    AffineMatrixExpr eye{Mat::Identity(n, n)};
    EntropyEpigraphHandle h = hypo_op_rel_entr(prog, rho, eye, m, k);
    h.function = "quantum_rel_entr";
    h.scalar = h.matrix.trace() - rho.weighted_trace(log_sigma);
    h.matrix = AffineMatrixExpr{};
    return h;
  }

  // Both variable: D(rho||sigma) = <vec(I)| D_op(rho (x) I, I (x) conj(sigma))
  // |vec(I)>, with the node blocks compressed against vec(I).
  EntropyEpigraphHandle h;
  h.function = "quantum_rel_entr";
  h.m = m;
  h.k = k;
  h.n = n;
  QuadratureScheme q = QuadratureScheme::gauss_legendre_01(m, k);
  Mat eye = Mat::Identity(n, n);
  AffineMatrixExpr xl = kron_right(rho, eye);
  AffineMatrixExpr yl = kron_left(eye, conj(sigma));
  bool real_only = expr_is_real(xl) && expr_is_real(yl);
  Vec v = Vec::Zero(n * n);
  for (int i = 0; i < n; ++i) v(i * n + i) = 1.0;
  LadderResult lad = build_ladder(prog, xl, yl, k, real_only, h.block_dims);
  h.scalar = build_nodes_compressed(prog, xl, lad.g_top, v, q, h.block_dims);
  return h;
}

EntropyEpigraphHandle hypo_quantum_cond_entr(ConicProgram& prog,
                                             const AffineMatrixExpr& joint,
                                             const std::vector<int>& dims,
                                             int traced_sys, int m, int k) {
  if (dims.size() != 2 || dims[0] * dims[1] != joint.dim())
    throw std::invalid_argument("cond_entr dims inconsistent with expression");
  if (traced_sys != 1 && traced_sys != 2)
    throw std::invalid_argument("traced_sys must be 1 or 2");
  int n = joint.dim();
  AffineMatrixExpr marginal = partial_trace(joint, traced_sys, dims);
  AffineMatrixExpr embedded =
      traced_sys == 1
          ? kron_left(Mat::Identity(dims[0], dims[0]), marginal)
          : kron_right(marginal, Mat::Identity(dims[1], dims[1]));

  // -D(joint || I (x) marginal) on the n^2 lift, with full-size node blocks.
  EntropyEpigraphHandle h;
  h.function = "quantum_cond_entr";
  h.m = m;
  h.k = k;
  h.n = n;
  QuadratureScheme q = QuadratureScheme::gauss_legendre_01(m, k);
  Mat eye = Mat::Identity(n, n);
  AffineMatrixExpr xl = kron_right(joint, eye);
  AffineMatrixExpr yl = kron_left(eye, conj(embedded));
  bool real_only = expr_is_real(xl) && expr_is_real(yl);
  LadderResult lad = build_ladder(prog, xl, yl, k, real_only, h.block_dims);
  AffineMatrixExpr t =
      build_nodes_matrix(prog, xl, lad.g_top, q, real_only, h.block_dims);
  Vec v = Vec::Zero(n * n);
  for (int i = 0; i < n; ++i) v(i * n + i) = 1.0;
  Mat vv = v * v.adjoint();
  h.scalar = (-1.0) * t.weighted_trace(vv);
  return h;
}

}  // namespace qre
