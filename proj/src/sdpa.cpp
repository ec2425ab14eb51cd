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

#include "qre/sdpa.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace qre {

void export_sdpa(const RealSdp& sdp, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out.precision(17);

  int nblocks = static_cast<int>(sdp.blocks.size()) + (sdp.num_eqs > 0 ? 1 : 0);
  out << "\"generated by qre; min c'x with X = sum x_l F_l - F0 >= 0\n";
  out << sdp.num_vars << "\n";
  out << nblocks << "\n";
  for (const auto& blk : sdp.blocks)
    out << (blk.diagonal ? -blk.size : blk.size) << " ";
  if (sdp.num_eqs > 0) out << -(2 * sdp.num_eqs);
  out << "\n";
  for (int l = 0; l < sdp.num_vars; ++l)
    out << sdp.c(l) << (l + 1 < sdp.num_vars ? " " : "");
  out << "\n";

  // F0 of the SDPA convention is -f0 of ours.
  for (size_t bi = 0; bi < sdp.blocks.size(); ++bi) {
    const auto& blk = sdp.blocks[bi];
    for (int i = 0; i < blk.size; ++i)
      for (int j = i; j < blk.size; ++j)
        if (blk.f0(i, j) != 0.0)
          out << "0 " << bi + 1 << " " << i + 1 << " " << j + 1 << " "
              << -blk.f0(i, j) << "\n";
    for (size_t l = 0; l < blk.vars.size(); ++l)
      for (const auto& e : blk.coeff[l])
        out << blk.vars[l] + 1 << " " << bi + 1 << " " << e.i + 1 << " "
            << e.j + 1 << " " << e.v << "\n";
  }

  if (sdp.num_eqs > 0) {
    int bi = static_cast<int>(sdp.blocks.size()) + 1;
    // row r: a'x - b >= 0 at diag 2r, b - a'x >= 0 at 2r+1
    for (int r = 0; r < sdp.num_eqs; ++r) {
      if (sdp.b(r) != 0.0) {
        out << "0 " << bi << " " << 2 * r + 1 << " " << 2 * r + 1 << " "
            << sdp.b(r) << "\n";
        out << "0 " << bi << " " << 2 * r + 2 << " " << 2 * r + 2 << " "
            << -sdp.b(r) << "\n";
      }
    }
    for (const auto& t : sdp.a_entries) {
      out << t.col() + 1 << " " << bi << " " << 2 * t.row() + 1 << " "
          << 2 * t.row() + 1 << " " << t.value() << "\n";
      out << t.col() + 1 << " " << bi << " " << 2 * t.row() + 2 << " "
          << 2 * t.row() + 2 << " " << -t.value() << "\n";
    }
  }
  if (!out) throw std::runtime_error("write failure on " + path);
}

void export_sdpa(const ConicProgram& prog, const std::string& path) {
  export_sdpa(realize(prog), path);
}

RealSdp import_sdpa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  auto next_data_line = [&](std::string& line) {
    while (std::getline(in, line)) {
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '"' || line[pos] == '*') continue;
      return true;
    }
    return false;
  };

  std::string line;
  RealSdp sdp;
  if (!next_data_line(line)) throw std::runtime_error("truncated SDPA file");
  sdp.num_vars = std::stoi(line);
  if (!next_data_line(line)) throw std::runtime_error("truncated SDPA file");
  int nblocks = std::stoi(line);
  if (!next_data_line(line)) throw std::runtime_error("truncated SDPA file");
  {
    // block sizes may be separated by spaces, commas or parentheses
    for (char& c : line)
      if (c == ',' || c == '(' || c == ')' || c == '{' || c == '}') c = ' ';
    std::istringstream ss(line);
    int sz;
    while (ss >> sz) {
      RealSdp::Block blk;
      blk.diagonal = sz < 0;
      blk.size = std::abs(sz);
      blk.f0 = RMat::Zero(blk.size, blk.size);
      sdp.blocks.push_back(std::move(blk));
    }
    if (static_cast<int>(sdp.blocks.size()) != nblocks)
      throw std::runtime_error("SDPA block count mismatch");
  }
  if (!next_data_line(line)) throw std::runtime_error("truncated SDPA file");
  {
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream ss(line);
    sdp.c = RVec::Zero(sdp.num_vars);
    for (int l = 0; l < sdp.num_vars; ++l)
      if (!(ss >> sdp.c(l))) throw std::runtime_error("bad objective line");
  }

  std::vector<std::map<int, std::vector<RealSdp::Entry>>> per_block(
      sdp.blocks.size());
  while (next_data_line(line)) {
    std::istringstream ss(line);
    int matno, blkno, i, j;
    double v;
    while (ss >> matno >> blkno >> i >> j >> v) {
      if (blkno < 1 || blkno > static_cast<int>(sdp.blocks.size()))
        throw std::runtime_error("SDPA entry block out of range");
      auto& blk = sdp.blocks[blkno - 1];
      if (i > j) std::swap(i, j);
      if (matno == 0) {
        blk.f0(i - 1, j - 1) = -v;
        blk.f0(j - 1, i - 1) = -v;
      } else {
        per_block[blkno - 1][matno - 1].push_back({i - 1, j - 1, v});
      }
    }
  }
  for (size_t bi = 0; bi < sdp.blocks.size(); ++bi)
    for (auto& [var, entries] : per_block[bi]) {
      sdp.blocks[bi].vars.push_back(var);
      sdp.blocks[bi].coeff.push_back(std::move(entries));
    }
  sdp.b = RVec::Zero(0);
  return sdp;
}

}  // namespace qre
