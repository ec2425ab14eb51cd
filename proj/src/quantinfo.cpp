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

#include "qre/quantinfo.hpp"

#include <cmath>
#include <random>

namespace qre {

namespace {

double nn(double x) { return x > 1e-300 ? -x * std::log(x) : 0.0; }

// Binary entropy of diag(1-p, p) in nats.
double h2_nats(double p) { return nn(p) + nn(1.0 - p); }

// Maximizes a concave function on [lo, hi] by golden-section search.
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-11) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return std::max(f(0.5 * (a + b)), std::max(fc, fd));
}

// Stinespring isometry of a channel, synthesized from the Kraus
// representation when none was supplied. Environment index varies fastest,
// matching the [dim_out, dim_env] ordering of apply_isometry.
std::pair<Mat, int> stinespring_of(const QuantumChannel& ch) {
  if (ch.dim_env() > 0) return {ch.isometry(), ch.dim_env()};
  std::vector<Mat> ops = ch.kraus_ops();
  int ne = static_cast<int>(ops.size());
  Mat u = Mat::Zero(ch.dim_out() * ne, ch.dim_in());
  for (int e = 0; e < ne; ++e)
    for (int b = 0; b < ch.dim_out(); ++b)
      for (int i = 0; i < ch.dim_in(); ++i) u(b * ne + e, i) = ops[e](b, i);
  return {u, ne};
}

AffineMatrixExpr density_var(ConicProgram& prog, int n, bool real_input) {
  AffineMatrixExpr rho = real_input ? prog.symmetric_var(n) : prog.hermitian_var(n);
  prog.add_psd(rho, "density");
  AffineScalar tr = rho.trace();
  tr.constant -= 1.0;
  prog.add_eq(tr);
  return rho;
}

// Diagonal shift applied to channel outputs inside the capacity SDPs. The
// exact joint state U rho U* is rank deficient for every input, which leaves
// the feasible region without an interior point and stalls the interior-point
// method; the shift restores strict feasibility at an O(delta*log(delta))
// entropy perturbation, far below the solve tolerance.
constexpr double kJointShift = 1e-7;

}  // namespace

CapacityResult cq_capacity(const std::vector<DensityMatrix>& states, int m,
                           int k, double tol) {
  if (states.empty()) throw std::invalid_argument("cq_capacity: no input states");
  int n = states[0].dim();
  for (const auto& s : states)
    if (s.dim() != n)
      throw std::invalid_argument("cq_capacity: state dimensions differ");

  ConicProgram prog;
  std::vector<int> p(states.size());
  std::map<int, Mat> mix_coeffs;
  AffineScalar simplex;
  simplex.constant = -1.0;
  AffineScalar obj;
  for (size_t x = 0; x < states.size(); ++x) {
    p[x] = prog.add_var();
    prog.add_nonneg(p[x]);
    simplex.coeffs[p[x]] = 1.0;
    mix_coeffs.emplace(p[x], states[x].mat());
    obj.coeffs[p[x]] = -entropy_exact(states[x]);
  }
  prog.add_eq(simplex);

  AffineMatrixExpr mix(n, Mat::Zero(n, n), std::move(mix_coeffs));
  auto h = hypo_quantum_entr(prog, mix, m, k);
  obj += h.scalar;
  prog.set_objective(obj, Sense::kMaximize);

  IpmOptions opts;
  opts.tol = tol;
  Solution sol = solve(prog, opts);

  CapacityResult res;
  res.m = m;
  res.k = k;
  res.status = sol.status;
  res.value_nats = sol.objective;
  res.value_bits = sol.objective * kNats2Bits;
  for (int id : p) res.prob.push_back(sol.x[id]);
  return res;
}

double cq_capacity_pure_binary_exact(const Vec& psi0, const Vec& psi1) {
  double eps = std::abs(psi0.normalized().dot(psi1.normalized()));
  return h2_nats(0.5 * (1.0 + eps)) * kNats2Bits;
}

QuantumChannel amplitude_damping_isometry(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("amplitude damping parameter must be in [0,1]");
  Mat u = Mat::Zero(4, 2);
  u(0, 0) = 1.0;                        // |0> -> |0>_B |0>_E
  u(1, 1) = std::sqrt(gamma);           // |1> -> sqrt(g)|0>_B|1>_E
  u(2, 1) = std::sqrt(1.0 - gamma);     //        + sqrt(1-g)|1>_B|0>_E
  return QuantumChannel::stinespring(u, 2, 2);
}

CapacityResult ea_capacity(const QuantumChannel& ch, int m, int k, double tol,
                           bool real_input, int dim_cap) {
  auto [u, ne] = stinespring_of(ch);
  int nb = ch.dim_out();
  if (nb * ne > dim_cap)
    throw std::invalid_argument("ea_capacity: joint output dimension over cap");

  ConicProgram prog;
  AffineMatrixExpr rho = density_var(prog, ch.dim_in(), real_input);
  AffineMatrixExpr joint = conjugate(u, rho);
  joint += AffineMatrixExpr(kJointShift * Mat::Identity(nb * ne, nb * ne));
  auto c = hypo_quantum_cond_entr(prog, joint, {nb, ne}, 1, m, k);  // H(B|E)
  auto h = hypo_quantum_entr(prog, partial_trace(joint, 2, {nb, ne}), m, k);
  prog.set_objective(c.scalar + h.scalar, Sense::kMaximize);

  IpmOptions opts;
  opts.tol = tol;
  Solution sol = solve(prog, opts);

  CapacityResult res;
  res.m = m;
  res.k = k;
  res.status = sol.status;
  res.value_nats = sol.objective;
  res.value_bits = sol.objective * kNats2Bits;
  res.rho_opt = rho.evaluate(sol.x);
  return res;
}

double ea_capacity_ad_oracle(double gamma) {
  auto mutual = [gamma](double p) {
    return h2_nats(p) + h2_nats((1.0 - gamma) * p) - h2_nats(gamma * p);
  };
  return golden_max(mutual, 0.0, 1.0) * kNats2Bits;
}

CapacityResult q_capacity_degradable(const QuantumChannel& channel,
                                     const QuantumChannel& degrading, int m,
                                     int k, double tol, bool real_input) {
  auto [u, ne] = stinespring_of(channel);
  auto [w, nf] = stinespring_of(degrading);
  int nb = channel.dim_out();
  int nep = degrading.dim_out();
  if (degrading.dim_in() != nb || nep != ne)
    throw std::invalid_argument("degrading map dimensions do not match channel");

  // Degradability: Xi(Phi(X)) == Phi_c(X) on a full operator basis.
  for (int i = 0; i < channel.dim_in(); ++i)
    for (int j = 0; j < channel.dim_in(); ++j) {
      Mat e = Mat::Zero(channel.dim_in(), channel.dim_in());
      e(i, j) = 1.0;
      Mat lifted = u * e * u.adjoint();
      Mat phi = partial_trace(lifted, 2, {nb, ne});
      Mat phic = partial_trace(lifted, 1, {nb, ne});
      Mat wl = w * phi * w.adjoint();
      Mat xi = partial_trace(wl, 2, {nep, nf});
      if ((xi - phic).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("supplied map does not degrade the channel");
    }

  ConicProgram prog;
  AffineMatrixExpr rho = density_var(prog, channel.dim_in(), real_input);
  AffineMatrixExpr phi_rho =
      partial_trace(conjugate(u, rho), 2, {nb, ne});
  AffineMatrixExpr lifted = conjugate(w, phi_rho);  // on E' (x) F
  lifted += AffineMatrixExpr(kJointShift * Mat::Identity(nep * nf, nep * nf));
  // I_c = H(B) - H(E) = H(F|E') of the degraded lift.
  auto c = hypo_quantum_cond_entr(prog, lifted, {nep, nf}, 2, m, k);
  prog.set_objective(c.scalar, Sense::kMaximize);

  IpmOptions opts;
  opts.tol = tol;
  Solution sol = solve(prog, opts);

  CapacityResult res;
  res.m = m;
  res.k = k;
  res.status = sol.status;
  res.value_nats = sol.objective;
  res.value_bits = sol.objective * kNats2Bits;
  res.rho_opt = rho.evaluate(sol.x);
  return res;
}

CapacityResult q_capacity_amplitude_damping(double gamma, int m, int k,
                                            double tol) {
  if (gamma < 0.0 || gamma > 0.5)
    throw std::invalid_argument(
        "amplitude damping is degradable only for gamma <= 1/2");
  QuantumChannel ch = amplitude_damping_isometry(gamma);
  QuantumChannel w =
      amplitude_damping_isometry((1.0 - 2.0 * gamma) / (1.0 - gamma));
  return q_capacity_degradable(ch, w, m, k, tol, /*real_input=*/true);
}

double q_capacity_ad_oracle(double gamma) {
  auto coherent = [gamma](double p) {
    return h2_nats((1.0 - gamma) * p) - h2_nats(gamma * p);
  };
  return golden_max(coherent, 0.0, 1.0) * kNats2Bits;
}

ReeResult ree_ppt(const DensityMatrix& rho, const std::vector<int>& dims, int m,
                  int k, double tol) {
  if (dims.size() != 2 || dims[0] * dims[1] != rho.dim())
    throw std::invalid_argument("ree_ppt expects a bipartite dimension split");

  ConicProgram prog;
  AffineMatrixExpr tau = prog.hermitian_var(rho.dim());
  prog.add_psd(tau, "density");
  AffineScalar tr = tau.trace();
  tr.constant -= 1.0;
  prog.add_eq(tr);
  prog.add_psd(partial_transpose(tau, 2, dims), "ppt");

  auto d = epi_quantum_rel_entr(prog, AffineMatrixExpr(rho.mat()), tau, m, k);
  prog.set_objective(d.scalar, Sense::kMinimize);

  IpmOptions opts;
  opts.tol = tol;
  Solution sol = solve(prog, opts);

  ReeResult res;
  res.m = m;
  res.k = k;
  res.status = sol.status;
  res.value_nats = sol.objective;
  res.value_bits = sol.objective * kNats2Bits;
  res.tau_opt = tau.evaluate(sol.x);
  return res;
}

double cmi(const DensityMatrix& rho_abc, const std::vector<int>& dims) {
  if (dims.size() != 3 || dims[0] * dims[1] * dims[2] != rho_abc.dim())
    throw std::invalid_argument("cmi expects a tripartite dimension split");
  const Mat& r = rho_abc.mat();
  Mat ab = partial_trace(r, 3, dims);
  Mat bc = partial_trace(r, 1, dims);
  Mat b = partial_trace(bc, 2, {dims[1], dims[2]});
  double nats = entropy_exact(ab) + entropy_exact(bc) - entropy_exact(b) -
                entropy_exact(r);
  return nats * kNats2Bits;
}

RecoveryResult rel_entr_recovery(const DensityMatrix& rho_abc,
                                 const std::vector<int>& dims, int m, int k,
                                 double tol, int dim_cap) {
  if (dims.size() != 3 || dims[0] * dims[1] * dims[2] != rho_abc.dim())
    throw std::invalid_argument("recovery expects a tripartite dimension split");
  int na = dims[0], nb = dims[1], nc = dims[2];
  if (na * nb * nc > dim_cap)
    throw std::invalid_argument("rel_entr_recovery: dimension over cap");

  Mat rho_ab = partial_trace(rho_abc.mat(), 3, dims);

  ConicProgram prog;
  // Choi matrix of the recovery channel B -> B (x) C; trace preserving.
  int nj = nb * nb * nc;
  AffineMatrixExpr jvar = prog.hermitian_var(nj);
  prog.add_psd(jvar, "choi");
  prog.add_eq(partial_trace(jvar, 2, {nb, nb * nc}),
              Mat::Identity(nb, nb));

  // Choi matrix of id_A (x) Lambda: tensor with the maximally entangled
  // projector on A (x) A' and interleave input/output factors.
  Mat wmat = Mat::Zero(na * na, na * na);
  for (int a = 0; a < na; ++a)
    for (int a2 = 0; a2 < na; ++a2) wmat(a * na + a, a2 * na + a2) = 1.0;
  AffineMatrixExpr lifted = system_exchange(kron_left(wmat, jvar), 2, 3,
                                            {na, na, nb, nb * nc});
  AffineMatrixExpr omega =
      apply_choi(lifted, rho_ab, na * nb, na * nb * nc);

  auto d = epi_quantum_rel_entr(prog, AffineMatrixExpr(rho_abc.mat()), omega,
                                m, k);
  prog.set_objective(d.scalar, Sense::kMinimize);

  IpmOptions opts;
  opts.tol = tol;
  Solution sol = solve(prog, opts);

  RecoveryResult res;
  res.m = m;
  res.k = k;
  res.status = sol.status;
  res.cmi_bits = cmi(rho_abc, dims);
  res.rer_bits = sol.objective * kNats2Bits;
  res.choi_opt = jvar.evaluate(sol.x);
  res.violation = res.rer_bits > res.cmi_bits + kRecoveryViolationMargin;
  return res;
}

DensityMatrix counterexample_state(double theta) {
  if (theta < -1e-12 || theta > M_PI_2 + 1e-12)
    throw std::invalid_argument("counterexample angle must be in [0, pi/2]");
  Vec psi = Vec::Zero(8);
  const double s = 1.0 / std::sqrt(2.0);
  // Index layout a*4 + b*2 + c with storage order (A, B, C).
  psi(0) = s;                        // |0>_A |0>_B |0>_C
  psi(3) = s * std::cos(theta);      // |0>_A |1>_B |1>_C
  psi(6) = s * std::sin(theta);      // |1>_A |1>_B |0>_C
  return DensityMatrix(psi * psi.adjoint(), {2, 2, 2});
}

std::vector<std::pair<double, double>> recovery_scatter(
    int count, unsigned seed, const std::vector<int>& dims, int m, int k,
    double tol) {
  std::mt19937 master(seed);
  std::vector<std::pair<double, double>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    unsigned s = master();
    DensityMatrix rho = random_pure(dims, s);
    RecoveryResult r = rel_entr_recovery(rho, dims, m, k, tol);
    out.emplace_back(r.cmi_bits, r.rer_bits);
  }
  return out;
}

}  // namespace qre
