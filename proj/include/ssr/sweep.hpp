// Copyright 2026 The SSR developers
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

#include <limits>
#include <vector>

#include "ssr/arch.hpp"
#include "ssr/circuit.hpp"
#include "ssr/predictor.hpp"

namespace ssr {

/// A maximal contiguous CNOT/SWAP block under the qubit cap.
struct SubcircuitWindow {
  std::vector<int> gate_ids;  // in circuit order
  std::vector<int> qubits;    // involved physical qubits, ascending
  size_t anchor = 0;          // kept-gate insertion index for replace_window
  int span_start = 0;         // absolute ASAP layer interval [start, end)
  int span_end = 0;
  bool single_cnot = false;   // exactly one CNOT after SWAP decomposition

  int span_length() const { return span_end - span_start; }
};

struct SweepParams {
  int n_q = 5;      // max qubits per window
  double n_t = 0.5;  // selected fraction of windows, in (0, 1]
};

struct SubcircuitScore {
  SubcircuitWindow window;
  int score = 0;  // layers: d(C) - d(C without window) - d_opt_est
  int d_opt_est = 0;

  static constexpr int kNeverSelect = std::numeric_limits<int>::min();
};

/// Greedy left-to-right scan extracting all blocks of contiguous CNOT/SWAP
/// gates with at most n_q qubits each. A single-qubit gate seals its qubit
/// for the open block touching it; a gate that would exceed the cap closes
/// the blocking block (oldest most-recent gate first) and opens a new one.
/// The returned windows partition the circuit's CNOT/SWAP gates.
std::vector<SubcircuitWindow> extract_subcircuits(const Circuit &c,
                                                  const ArchitectureGraph &ag,
                                                  int n_q);

/// Window count of extract_subcircuits; the r_sub ingredient of GA fitness.
int count_subcircuits(const Circuit &c, const ArchitectureGraph &ag, int n_q);

/// Local GF(2) semantics of a window, over its qubits relabeled ascending.
GF2Matrix window_matrix(const Circuit &c, const SubcircuitWindow &w);

/// Potential depth improvement of rewriting w with an optimal replacement.
/// Windows flagged single_cnot score kNeverSelect.
SubcircuitScore score_window(const Circuit &c, const ArchitectureGraph &ag,
                             const SubcircuitWindow &w,
                             DepthPredictor &predictor);

/// The ceil(n_t * n) highest-scoring windows, ties broken by earlier anchor;
/// never-select windows are excluded.
std::vector<SubcircuitWindow> select_top(
    const std::vector<SubcircuitScore> &scores, double n_t);

}  // namespace ssr
