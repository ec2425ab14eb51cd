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

#include "qre/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>

namespace qre {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kNumericalLimit: return "numerical_limit";
  }
  return "?";
}

namespace {

using Block = RealSdp::Block;

// Largest step alpha <= cap with x + alpha*dx psd.
double max_step(const RMat& x, const RMat& dx, double cap) {
  Eigen::LLT<RMat> llt(x);
  if (llt.info() != Eigen::Success) return 0.0;
  RMat l = llt.matrixL();
  RMat w = l.triangularView<Eigen::Lower>().solve(dx);
  RMat v = l.triangularView<Eigen::Lower>().solve(w.transpose()).transpose();
  v = 0.5 * (v + v.transpose().eval());
  Eigen::SelfAdjointEigenSolver<RMat> es(v, Eigen::EigenvaluesOnly);
  double lmin = es.eigenvalues().minCoeff();
  if (lmin >= -1e-14) return cap;
  return std::min(cap, -1.0 / lmin);
}

struct BlockWork {
  RMat s, z, sinv, rp, ds, dz, dsa, dza, k;
  // Sparse coefficient map: row l holds vec(F_l) for the block's l-th local
  // variable, with off-diagonal entries mirrored. Lets residuals, Schur
  // columns, and Newton right-hand sides run as sparse mat-vec products.
  Eigen::SparseMatrix<double> e;
};

RVec gather(const RVec& x, const std::vector<int>& vars) {
  RVec v(vars.size());
  for (size_t l = 0; l < vars.size(); ++l) v(l) = x(vars[l]);
  return v;
}

}  // namespace

Solution solve(const RealSdp& sdp, const IpmOptions& opts) {
  const int n = sdp.num_vars;
  const int p = sdp.num_eqs;
  const int nb = static_cast<int>(sdp.blocks.size());

  Eigen::SparseMatrix<double> a(p, n);
  a.setFromTriplets(sdp.a_entries.begin(), sdp.a_entries.end());
  RMat ad = RMat(a);  // p is small in every program we build

  RVec x = RVec::Zero(n), y = RVec::Zero(p);
  std::vector<BlockWork> w(nb);
  double fnorm = 1.0, cnorm = 1.0 + sdp.c.cwiseAbs().maxCoeff();
  for (const auto& blk : sdp.blocks)
    fnorm = std::max(fnorm, blk.f0.cwiseAbs().maxCoeff());
  if (p > 0) fnorm = std::max(fnorm, sdp.b.cwiseAbs().maxCoeff());
  double beta = 10.0 * (1.0 + fnorm), zeta = 10.0 * cnorm;
  int total_dim = 0;
  for (int i = 0; i < nb; ++i) {
    const Block& blk = sdp.blocks[i];
    int sz = blk.size;
    w[i].s = beta * RMat::Identity(sz, sz);
    w[i].z = zeta * RMat::Identity(sz, sz);
    total_dim += sz;
    std::vector<Eigen::Triplet<double>> ts;
    for (size_t l = 0; l < blk.vars.size(); ++l)
      for (const auto& e : blk.coeff[l]) {
        ts.emplace_back(static_cast<int>(l), e.i * sz + e.j, e.v);
        if (e.i != e.j)
          ts.emplace_back(static_cast<int>(l), e.j * sz + e.i, e.v);
      }
    w[i].e.resize(static_cast<int>(blk.vars.size()), sz * sz);
    w[i].e.setFromTriplets(ts.begin(), ts.end());
  }

  Solution sol;
  sol.x.assign(n, 0.0);
  auto finish = [&](SolveStatus st, double gap, int it) {
    sol.status = st;
    for (int l = 0; l < n; ++l) sol.x[l] = x(l);
    double pobj = sdp.c.dot(x);
    sol.objective = (sdp.maximize ? -pobj : pobj) + sdp.obj_constant;
    sol.gap = gap;
    sol.iterations = it;
    return sol;
  };

  // Best iterate so far; stalls and failed steps fall back to it.
  RVec best_x = x;
  double best_err = 1e300, best_gap = 1.0, best_pinf = 1.0, best_dinf = 1.0;
  auto finish_best = [&](int it) {
    x = best_x;
    bool near = best_gap <= 100.0 * opts.tol &&
                best_pinf <= 100.0 * opts.feas_tol &&
                best_dinf <= 100.0 * opts.feas_tol;
    return finish(near ? SolveStatus::kOptimal : SolveStatus::kNumericalLimit,
                  best_gap, it);
  };

  double relgap = 1.0;
  int small_steps = 0, no_progress = 0;

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    // Residuals.
    double mu = 0;
    for (int i = 0; i < nb; ++i) {
      const Block& blk = sdp.blocks[i];
      int sz = blk.size;
      RVec fxv = w[i].e.transpose() * gather(x, blk.vars);
      w[i].rp = blk.f0 + Eigen::Map<const RMat>(fxv.data(), sz, sz) - w[i].s;
      mu += (w[i].s.array() * w[i].z.array()).sum();
    }
    mu /= total_dim;
    RVec re = sdp.b - a * x;
    RVec rd = sdp.c - ad.transpose() * y;
    for (int i = 0; i < nb; ++i) {
      const Block& blk = sdp.blocks[i];
      int sz = blk.size;
      RVec zv = w[i].e * Eigen::Map<const RVec>(w[i].z.data(), sz * sz);
      for (size_t l = 0; l < blk.vars.size(); ++l) rd(blk.vars[l]) -= zv(l);
    }

    double pobj = sdp.c.dot(x);
    double dobj = (p > 0 ? sdp.b.dot(y) : 0.0);
    for (int i = 0; i < nb; ++i)
      dobj -= (w[i].z.array() * sdp.blocks[i].f0.array()).sum();
    relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    double pinf = (p > 0 ? re.cwiseAbs().maxCoeff() : 0.0);
    for (int i = 0; i < nb; ++i)
      pinf = std::max(pinf, w[i].rp.cwiseAbs().maxCoeff());
    pinf /= (1.0 + fnorm);
    double dinf = rd.cwiseAbs().maxCoeff() / cnorm;

    if (opts.verbose)
      std::fprintf(stderr, "it %3d  mu %.3e  gap %.3e  pinf %.3e  dinf %.3e\n",
                   iter, mu, relgap, pinf, dinf);

    double err = std::max(relgap, std::max(pinf, dinf));
    if (!std::isfinite(mu) || !std::isfinite(err)) return finish_best(iter);
    if (err < 0.98 * best_err)
      no_progress = 0;
    else if (++no_progress >= 6 && best_err < 1e-3)
      return finish_best(iter);  // stalled at the numerical floor
    if (err < best_err) {
      best_err = err;
      best_x = x;
      best_gap = relgap;
      best_pinf = pinf;
      best_dinf = dinf;
    } else if (err > 1e4 * best_err && best_err < 1e-4) {
      return finish_best(iter);  // diverging after near-convergence
    }

    if (relgap <= opts.tol && pinf <= opts.feas_tol && dinf <= opts.feas_tol)
      return finish(SolveStatus::kOptimal, relgap, iter);
    if (pinf <= opts.feas_tol && pobj < -1e9 * (1.0 + fnorm))
      return finish(SolveStatus::kUnbounded, relgap, iter);
    if (dinf <= opts.feas_tol && dobj > 1e9 * (1.0 + fnorm))
      return finish(SolveStatus::kInfeasible, relgap, iter);

    // Schur complement M (HKM, symmetrized).
    RMat m = RMat::Zero(n, n);
    for (int i = 0; i < nb; ++i) {
      const Block& blk = sdp.blocks[i];
      int sz = blk.size;
      Eigen::LLT<RMat> llt(w[i].s);
      w[i].sinv = llt.solve(RMat::Identity(sz, sz));
      size_t nloc = blk.vars.size();
      RMat u(sz, sz);
      for (size_t lp = 0; lp < nloc; ++lp) {
        u.setZero();
        for (const auto& e : blk.coeff[lp]) {
          u += e.v * (w[i].sinv.col(e.i) * w[i].z.col(e.j).transpose());
          if (e.i != e.j)
            u += e.v * (w[i].sinv.col(e.j) * w[i].z.col(e.i).transpose());
        }
        RMat usym = 0.5 * (u + u.transpose());
        RVec col = w[i].e * Eigen::Map<const RVec>(usym.data(), sz * sz);
        int gp = blk.vars[lp];
        for (size_t l = 0; l < nloc; ++l) m(blk.vars[l], gp) += col(l);
      }
    }
    m = 0.5 * (m + m.transpose().eval());
    double ridge = 1e-13 * (1.0 + m.diagonal().cwiseAbs().maxCoeff());
    Eigen::LLT<RMat> mchol;
    for (int attempt = 0; attempt < 8; ++attempt) {
      mchol.compute(m + ridge * RMat::Identity(n, n));
      if (mchol.info() == Eigen::Success) break;
      ridge *= 100.0;
    }
    if (mchol.info() != Eigen::Success) return finish_best(iter);

    RMat mi_at;
    Eigen::LDLT<RMat> schur_eq;
    if (p > 0) {
      mi_at = mchol.solve(ad.transpose());
      schur_eq.compute(RMat(ad * mi_at));
    }

    // One Newton solve for a given complementarity target; fills dx,dy,ds,dz.
    auto newton = [&](double sigma_mu, bool corrector, RVec& dx, RVec& dy) {
      RVec h = RVec::Zero(n);
      for (int i = 0; i < nb; ++i) {
        const Block& blk = sdp.blocks[i];
        RMat k = -w[i].z - w[i].sinv * w[i].rp * w[i].z;
        if (sigma_mu > 0) k += sigma_mu * w[i].sinv;
        if (corrector) k -= w[i].sinv * w[i].dsa * w[i].dza;
        w[i].k = 0.5 * (k + k.transpose().eval());
        int sz = blk.size;
        RVec kv = w[i].e * Eigen::Map<const RVec>(w[i].k.data(), sz * sz);
        for (size_t l = 0; l < blk.vars.size(); ++l) h(blk.vars[l]) += kv(l);
      }
      RVec q = h - rd;
      if (p > 0) {
        RVec x1 = mchol.solve(q);
        dy = schur_eq.solve(re - a * x1);
        dx = x1 + mi_at * dy;
      } else {
        dy.resize(0);
        dx = mchol.solve(q);
      }
      for (int i = 0; i < nb; ++i) {
        const Block& blk = sdp.blocks[i];
        int sz = blk.size;
        // k already contains the -sym(Sinv*Rp*Z) part; dz needs only the
        // F(dx) contribution on top of it.
        RVec fdxv = w[i].e.transpose() * gather(dx, blk.vars);
        RMat fdx = Eigen::Map<const RMat>(fdxv.data(), sz, sz);
        w[i].ds = w[i].rp + fdx;
        RMat dz = w[i].k - w[i].sinv * fdx * w[i].z;
        w[i].dz = 0.5 * (dz + dz.transpose().eval());
      }
    };

    // Predictor (affine direction).
    RVec dxa(n), dya(p);
    newton(0.0, false, dxa, dya);
    double apa = 1.0, ada = 1.0;
    for (int i = 0; i < nb; ++i) {
      w[i].dsa = w[i].ds;
      w[i].dza = w[i].dz;
      apa = std::min(apa, max_step(w[i].s, w[i].dsa, 1.0));
      ada = std::min(ada, max_step(w[i].z, w[i].dza, 1.0));
    }
    double mu_aff = 0;
    for (int i = 0; i < nb; ++i)
      mu_aff += ((w[i].s + apa * w[i].dsa).array() *
                 (w[i].z + ada * w[i].dza).array())
                    .sum();
    mu_aff /= total_dim;
    double sigma = std::pow(std::max(0.0, mu_aff / mu), 3.0);
    sigma = std::min(1.0, std::max(sigma, 1e-10));

    // Corrector.
    RVec dx(n), dy(p);
    newton(sigma * mu, true, dx, dy);
    double ap = 1e30, adl = 1e30;
    for (int i = 0; i < nb; ++i) {
      ap = std::min(ap, max_step(w[i].s, w[i].ds, 1.0 / 0.98));
      adl = std::min(adl, max_step(w[i].z, w[i].dz, 1.0 / 0.98));
    }
    ap = std::min(1.0, 0.98 * ap);
    adl = std::min(1.0, 0.98 * adl);

    // Certify strict cone feasibility of the accepted step; the eigenvalue
    // bound above can be optimistic when a block is nearly singular.
    auto shrink_to_cone = [&](double alpha, bool primal) {
      for (int t = 0; t < 60 && alpha > 0; ++t) {
        bool ok = true;
        for (int i = 0; i < nb && ok; ++i) {
          const RMat& base = primal ? w[i].s : w[i].z;
          const RMat& dir = primal ? w[i].ds : w[i].dz;
          Eigen::LLT<RMat> chk(base + alpha * dir);
          ok = chk.info() == Eigen::Success;
        }
        if (ok) return alpha;
        alpha *= 0.5;
      }
      return 0.0;
    };
    ap = shrink_to_cone(ap, true);
    adl = shrink_to_cone(adl, false);
    if (ap <= 0 || adl <= 0) return finish_best(iter);

    x += ap * dx;
    for (int i = 0; i < nb; ++i) w[i].s += ap * w[i].ds;
    if (p > 0) y += adl * dy;
    for (int i = 0; i < nb; ++i) w[i].z += adl * w[i].dz;

    if (std::min(ap, adl) < 1e-4) {
      if (++small_steps >= 3) return finish_best(iter);
    } else {
      small_steps = 0;
    }
  }
  return finish_best(opts.max_iters);
}

Solution solve(const ConicProgram& prog, const IpmOptions& opts) {
  return solve(realize(prog), opts);
}

Solution solve(const ConicProgram& prog, double tol) {
  IpmOptions opts;
  opts.tol = tol;
  return solve(prog, opts);
}

}  // namespace qre
