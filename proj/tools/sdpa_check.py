# Copyright 2026 qre developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent sparse-SDPA consumer: parses a .dat-s file and solves it
with cvxpy, printing the optimal value of  min c'x  s.t. each block
sum_l x_l F_l - F0 >= 0.  Used to cross-validate the embedded solver."""

import sys

import cvxpy as cp
import numpy as np


def parse_dats(path):
    tokens_lines = []
    with open(path) as f:
        for line in f:
            if line.startswith('"') or line.startswith("*"):
                continue
            line = line.replace(",", " ").replace("(", " ").replace(")", " ")
            line = line.replace("{", " ").replace("}", " ")
            if line.strip():
                tokens_lines.append(line.split())
    mdim = int(tokens_lines[0][0])
    nblocks = int(tokens_lines[1][0])
    sizes = [int(v) for v in tokens_lines[2][:nblocks]]
    c = np.array([float(v) for v in tokens_lines[3][:mdim]])
    mats = [[np.zeros((abs(s), abs(s))) for s in sizes] for _ in range(mdim + 1)]
    for toks in tokens_lines[4:]:
        matno, blkno, i, j = (int(v) for v in toks[:4])
        v = float(toks[4])
        m = mats[matno][blkno - 1]
        m[i - 1, j - 1] = v
        m[j - 1, i - 1] = v
    return mdim, sizes, c, mats


def main():
    mdim, sizes, c, mats = parse_dats(sys.argv[1])
    x = cp.Variable(mdim)
    cons = []
    for b, s in enumerate(sizes):
        expr = -cp.Constant(mats[0][b])
        for l in range(mdim):
            if np.any(mats[l + 1][b]):
                expr = expr + x[l] * cp.Constant(mats[l + 1][b])
        if s < 0:
            cons.append(cp.diag(expr) >= 0)
        else:
            cons.append(expr >> 0)
    prob = cp.Problem(cp.Minimize(c @ x), cons)
    prob.solve(solver=cp.SCS, eps=1e-10, max_iters=200000)
    print(f"{prob.value:.12e}")


if __name__ == "__main__":
    main()
