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

#include "qre/conic.hpp"

namespace qre {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kNumericalLimit };

const char* to_string(SolveStatus s);

struct Solution {
  SolveStatus status = SolveStatus::kNumericalLimit;
  std::vector<double> x;     // primal values, indexed by variable id
  double objective = 0.0;    // in the user's sense, constant included
  double gap = 0.0;          // reported relative duality gap
  int iterations = 0;
};

struct IpmOptions {
  double tol = 1e-8;         // relative gap target
  double feas_tol = 1e-8;    // primal/dual residual target
  int max_iters = 150;
  bool verbose = false;
};

// Embedded primal-dual interior-point method (HKM direction, Mehrotra
// predictor-corrector) for PSD + nonnegative + free programs. Reentrant
// across program instances.
Solution solve(const RealSdp& sdp, const IpmOptions& opts = {});
Solution solve(const ConicProgram& prog, double tol = 1e-8);
Solution solve(const ConicProgram& prog, const IpmOptions& opts);

}  // namespace qre
