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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "qre/quantinfo.hpp"

namespace {

constexpr const char* kBackendId = "qre-ipm";

struct Options {
  std::string experiment;
  std::string out = ".";
  std::string format = "csv";
  unsigned long long seed = 12345;
  int m = 3, k = 3;
  int grid = -1;   // -1: per-experiment default
  int count = -1;
  double tol = 1e-8;
};

struct Report {
  std::string experiment;
  std::vector<std::string> columns;  // fixed order, wall_ms last
  std::vector<std::vector<double>> rows;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_provenance(std::ostream& os, const Options& o, const Report& r,
                      const char* prefix) {
  os << prefix << " experiment: " << r.experiment << "\n"
     << prefix << " backend: " << kBackendId << "\n"
     << prefix << " m: " << o.m << "\n"
     << prefix << " k: " << o.k << "\n"
     << prefix << " seed: " << o.seed << "\n"
     << prefix << " grid: " << o.grid << "\n"
     << prefix << " count: " << o.count << "\n"
     << prefix << " tol: " << fmt(o.tol) << "\n";
}

void write_csv(const std::filesystem::path& path, const Options& o,
               const Report& r, bool truncated) {
  std::ofstream os(path);
  write_provenance(os, o, r, "#");
  for (size_t c = 0; c < r.columns.size(); ++c)
    os << (c ? "," : "") << r.columns[c];
  os << "\n";
  for (const auto& row : r.rows) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << fmt(row[c]);
    os << "\n";
  }
  if (truncated) os << "# truncated\n";
}

void write_json(const std::filesystem::path& path, const Options& o,
                const Report& r, bool truncated) {
  nlohmann::json j;
  j["experiment"] = r.experiment;
  j["backend"] = kBackendId;
  j["parameters"] = {{"m", o.m},     {"k", o.k},         {"seed", o.seed},
                     {"grid", o.grid}, {"count", o.count}, {"tol", o.tol}};
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  j["truncated"] = truncated;
  std::ofstream os(path);
  os << j.dump(2) << "\n";
}

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void require_converged(qre::SolveStatus s, const std::string& context) {
  if (s == qre::SolveStatus::kInfeasible || s == qre::SolveStatus::kUnbounded)
    throw std::runtime_error("solver failed (" + std::string(qre::to_string(s)) +
                             ") at " + context);
}

void run_accuracy_cq(const Options& o, Report& r) {
  r = Report{"accuracy-cq", {"index", "true_bits", "computed_bits", "abs_error",
                           "wall_ms"}, {}};
  int count = o.count > 0 ? o.count : 10;
  for (int i = 0; i < count; ++i) {
    double t0 = now_ms();
    qre::DensityMatrix s0 =
        qre::random_pure({2}, static_cast<unsigned>(o.seed + 2 * i));
    qre::DensityMatrix s1 =
        qre::random_pure({2}, static_cast<unsigned>(o.seed + 2 * i + 1));
    Eigen::SelfAdjointEigenSolver<qre::Mat> es0(s0.mat()), es1(s1.mat());
    qre::Vec psi0 = es0.eigenvectors().col(1), psi1 = es1.eigenvectors().col(1);
    double exact = qre::cq_capacity_pure_binary_exact(psi0, psi1);
    auto res = qre::cq_capacity({s0, s1}, o.m, o.k, o.tol);
    require_converged(res.status, "accuracy-cq row " + std::to_string(i));
    r.rows.push_back({double(i), exact, res.value_bits,
                      std::abs(res.value_bits - exact), now_ms() - t0});
  }
}

void run_ea_sweep(const Options& o, Report& r) {
  r = Report{"ea-sweep", {"gamma", "capacity_bits", "wall_ms"}, {}};
  int grid = o.grid > 0 ? o.grid : 21;
  for (int i = 0; i < grid; ++i) {
    double g = grid == 1 ? 0.0 : double(i) / (grid - 1);
    double t0 = now_ms();
    auto res = qre::ea_capacity(qre::amplitude_damping_isometry(g), o.m, o.k,
                                o.tol, /*real_input=*/true);
    require_converged(res.status, "ea-sweep gamma=" + fmt(g));
    r.rows.push_back({g, res.value_bits, now_ms() - t0});
  }
}

void run_q_sweep(const Options& o, Report& r) {
  r = Report{"q-sweep", {"gamma", "capacity_bits", "wall_ms"}, {}};
  int grid = o.grid > 0 ? o.grid : 21;
  for (int i = 0; i < grid; ++i) {
    double g = grid == 1 ? 0.0 : 0.5 * double(i) / (grid - 1);
    double t0 = now_ms();
    auto res = qre::q_capacity_amplitude_damping(g, o.m, o.k, o.tol);
    require_converged(res.status, "q-sweep gamma=" + fmt(g));
    r.rows.push_back({g, res.value_bits, now_ms() - t0});
  }
}

void run_ree_bench(const Options& o, Report& r) {
  r = Report{"ree-bench", {"na", "nb", "dim", "value_bits", "wall_ms"}, {}};
  const std::vector<std::pair<int, int>> ladder = {{2, 2}, {2, 3}, {2, 4},
                                                   {3, 3}, {3, 4}, {4, 4}};
  int idx = 0;
  for (auto [na, nb] : ladder) {
    int n = na * nb;
    qre::DensityMatrix rho(
        qre::random_density(n, n, static_cast<unsigned>(o.seed + idx)).mat(),
        std::vector<int>{na, nb});
    double t0 = now_ms();
    auto res = qre::ree_ppt(rho, {na, nb}, o.m, o.k, o.tol);
    require_converged(res.status,
                      "ree-bench " + std::to_string(na) + "x" + std::to_string(nb));
    r.rows.push_back({double(na), double(nb), double(n), res.value_bits,
                      now_ms() - t0});
    ++idx;
  }
}

void run_recovery_scatter(const Options& o, Report& r) {
  r = Report{"recovery-scatter", {"index", "cmi_bits", "rer_bits", "wall_ms"}, {}};
  int count = o.count > 0 ? o.count : 500;
  std::mt19937 master(static_cast<unsigned>(o.seed));
  for (int i = 0; i < count; ++i) {
    unsigned s = master();
    double t0 = now_ms();
    qre::DensityMatrix rho = qre::random_pure({2, 2, 2}, s);
    auto res = qre::rel_entr_recovery(rho, {2, 2, 2}, o.m, o.k, o.tol);
    require_converged(res.status, "recovery-scatter row " + std::to_string(i));
    r.rows.push_back({double(i), res.cmi_bits, res.rer_bits, now_ms() - t0});
  }
}

void run_recovery_theta(const Options& o, Report& r) {
  r = Report{"recovery-theta", {"theta", "cmi_bits", "rer_bits", "wall_ms"}, {}};
  int grid = o.grid > 0 ? o.grid : 50;
  for (int i = 0; i < grid; ++i) {
    double th = grid == 1 ? 0.0 : M_PI_2 * double(i) / (grid - 1);
    double t0 = now_ms();
    qre::DensityMatrix rho = qre::counterexample_state(th);
    auto res = qre::rel_entr_recovery(rho, {2, 2, 2}, o.m, o.k, o.tol);
    require_converged(res.status, "recovery-theta theta=" + fmt(th));
    r.rows.push_back({th, res.cmi_bits, res.rer_bits, now_ms() - t0});
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"quantum relative entropy experiment driver"};
  app.add_option("--experiment", o.experiment,
                 "one of accuracy-cq, ea-sweep, q-sweep, ree-bench, "
                 "recovery-scatter, recovery-theta")
      ->required();
  app.add_option("--out", o.out, "output directory");
  app.add_option("--seed", o.seed, "RNG seed");
  app.add_option("--m", o.m, "quadrature nodes")->check(CLI::PositiveNumber);
  app.add_option("--k", o.k, "square-root halvings")->check(CLI::PositiveNumber);
  app.add_option("--grid", o.grid, "sweep grid size");
  app.add_option("--count", o.count, "row count for sampled experiments");
  app.add_option("--tol", o.tol, "solver tolerance");
  app.add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }
  if (o.grid == 0 || o.grid < -1 || o.count == 0 || o.count < -1) {
    std::cerr << "invalid grid/count\n";
    return 64;
  }

  Report r;
  bool truncated = false;
  int code = 0;
  try {
    if (o.experiment == "accuracy-cq") run_accuracy_cq(o, r);
    else if (o.experiment == "ea-sweep") run_ea_sweep(o, r);
    else if (o.experiment == "q-sweep") run_q_sweep(o, r);
    else if (o.experiment == "ree-bench") run_ree_bench(o, r);
    else if (o.experiment == "recovery-scatter") run_recovery_scatter(o, r);
    else if (o.experiment == "recovery-theta") run_recovery_theta(o, r);
    else {
      std::cerr << "unknown experiment: " << o.experiment << "\n";
      return 64;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    truncated = true;
    code = 2;
    if (r.columns.empty()) return 2;  // nothing partial to write
  }

  std::filesystem::create_directories(o.out);
  std::filesystem::path path =
      std::filesystem::path(o.out) / (o.experiment + "." + o.format);
  if (o.format == "json")
    write_json(path, o, r, truncated);
  else
    write_csv(path, o, r, truncated);
  std::cout << path.string() << "\n";
  return code;
}
