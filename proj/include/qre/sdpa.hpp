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

#include <string>

#include "qre/conic.hpp"

namespace qre {

// Sparse SDPA ".dat-s" export of the real-embedded program:
//   line 1: number of variables, line 2: number of blocks,
//   line 3: block sizes (negative = diagonal), line 4: objective vector,
//   then quintuples "matno blkno i j value" (matno 0 is F0, i <= j).
// Convention: min c'x s.t. X = sum_l x_l F_l - F0 >= 0 per block.
// Equality rows are exported as a paired-inequality diagonal block.
void export_sdpa(const RealSdp& sdp, const std::string& path);
void export_sdpa(const ConicProgram& prog, const std::string& path);

// Parses a sparse SDPA file back into the real-embedded form. Equalities
// exported by export_sdpa come back as the paired-inequality block, which
// defines the same feasible set.
RealSdp import_sdpa(const std::string& path);

}  // namespace qre
