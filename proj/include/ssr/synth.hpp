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

#include <optional>
#include <utility>
#include <vector>

#include "ssr/arch.hpp"
#include "ssr/circuit.hpp"
#include "ssr/gf2.hpp"
#include "ssr/sat.hpp"
#include "ssr/sweep.hpp"

namespace ssr {

/// A (depth, qubit) slot the synthesized circuit must keep free of CNOTs.
struct BlockedPosition {
  int d;  // depth index relative to the synthesis window
  int q;  // window-local qubit index
};

/// CNF instance for "is there a CNOT circuit of exactly `depth` layers,
/// hardware-compliant on `ag`, realizing `target`". Variables follow the
/// matrix/gate scheme: m(d,i,k) holds the matrix entry after d layers,
/// g(d,c,t) the presence of CNOT(c,t) in layer d.
class CnfInstance {
 public:
  CnfFormula formula;

  int dim() const { return n_; }
  int depth() const { return depth_; }
  const std::vector<std::pair<int, int>> &directed_gates() const {
    return gates_;
  }

  int matrix_var(int d, int i, int k) const {
    return 1 + (d * n_ + i) * n_ + k;
  }
  /// 0 when (c,t) is not an architecture edge.
  int gate_var(int d, int c, int t) const {
    int g = gate_index_[c * n_ + t];
    return g < 0 ? 0 : gate_var_base_ + d * static_cast<int>(gates_.size()) + g;
  }

 private:
  friend CnfInstance encode(const GF2Matrix &, const ArchitectureGraph &, int,
                            const std::vector<BlockedPosition> &);
  int n_ = 0;
  int depth_ = 0;
  int gate_var_base_ = 0;
  std::vector<std::pair<int, int>> gates_;  // directed (control, target)
  std::vector<int> gate_index_;             // (c*n + t) -> index or -1
};

/// Clauses: boundary (m^0 = I, m^D = target), at least one gate per layer,
/// per-qubit at-most-one gate per layer (pairwise), conditional row update
/// under each gate, change-implies-cause per entry, and blocked-position
/// exclusions. Blocked entries with d >= depth_budget are ignored.
CnfInstance encode(const GF2Matrix &target, const ArchitectureGraph &ag,
                   int depth_budget,
                   const std::vector<BlockedPosition> &blocked = {});

/// Reads a model back into a CNOT circuit, gates grouped by layer and
/// ordered by (control, target) within a layer.
Circuit decode(const CnfInstance &instance, const std::vector<bool> &model);

struct SynthesisResult {
  Circuit circuit;              // CNOT-only, window-local qubits
  std::vector<int> gate_layer;  // synthesis layer of each gate, in order
  int achieved_depth = 0;
  int sat_calls = 0;
};

/// Depth-optimal synthesis by repeated SAT trials starting from d_pred:
/// descend on success until proven minimal, ascend on failure until the
/// first success. Returns nullopt when no depth up to `max_depth` works
/// (possible only with blocked positions or a reduced cap); without blocks
/// the n^2 default cap always suffices for reachable targets.
std::optional<SynthesisResult> synthesize(
    const GF2Matrix &target, const ArchitectureGraph &ag,
    const std::vector<BlockedPosition> &blocked, int d_pred,
    SatBackend &backend, int max_depth = -1);

/// Slots of the aligned synthesis window occupied by the rest of the
/// circuit: gates the window depends on are placed ASAP, gates depending on
/// the window as late as the current overall depth minus one allows.
std::vector<BlockedPosition> blocked_positions(const Circuit &c,
                                               const SubcircuitWindow &w,
                                               int horizon);

/// Minimal number of CNOT layers (qubit-disjoint edge CNOT sets, at least
/// one gate each) reaching `target` from the identity; breadth-first over
/// GL(n,2), n <= 5. Honors blocked positions when given. nullopt when no
/// solution exists within max_depth.
std::optional<int> bfs_oracle(const GF2Matrix &target,
                              const ArchitectureGraph &ag, int max_depth,
                              const std::vector<BlockedPosition> *blocked =
                                  nullptr);

/// Serial reference for the parallel frontier expansion inside bfs_oracle
/// and bfs_distance_table; kept for testing and benchmarking.
std::optional<int> bfs_oracle_serial(const GF2Matrix &target,
                                     const ArchitectureGraph &ag,
                                     int max_depth,
                                     const std::vector<BlockedPosition>
                                         *blocked = nullptr);

/// Distance from the identity for every reachable packed matrix (255 =
/// unreachable). Index space is 2^(n*n) for n <= 5.
std::vector<uint8_t> bfs_distance_table(const ArchitectureGraph &ag);
std::vector<uint8_t> bfs_distance_table_serial(const ArchitectureGraph &ag);

/// Exact optimal depth by two-sided breadth-first search; fast for single
/// queries on 5-qubit windows.
int bidirectional_depth(const GF2Matrix &target, const ArchitectureGraph &ag);

/// All ways to fill one layer: nonempty sets of pairwise qubit-disjoint
/// directed edge CNOTs, each move a list of (control, target) pairs.
std::vector<std::vector<std::pair<int, int>>> enumerate_layer_moves(
    const ArchitectureGraph &ag);

}  // namespace ssr
