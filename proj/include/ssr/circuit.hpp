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

#include <string>
#include <vector>

#include "ssr/error.hpp"

namespace ssr {

enum class GateKind { H, X, T, Tdg, S, Sdg, Rz, U, CNOT, SWAP };

inline bool is_two_qubit(GateKind k) {
  return k == GateKind::CNOT || k == GateKind::SWAP;
}

/// CNOT and SWAP are the linear (GF(2)) gates; everything else is a
/// single-qubit gate.
inline bool is_linear(GateKind k) { return is_two_qubit(k); }

const char *gate_kind_name(GateKind k);

/// A gate instance in a circuit. For CNOT, q0 is the control and q1 the
/// target; for SWAP the operand order is immaterial. Single-qubit gates use
/// q0 only (q1 == -1). `label` holds the Rz angle text (re-emitted verbatim
/// in QASM) or the name of an opaque U gate; empty otherwise.
struct Gate {
  int id = -1;
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  std::string label;

  bool single_qubit() const { return q1 < 0; }
  bool acts_on(int q) const { return q0 == q || q1 == q; }
  bool shares_qubit(const Gate &other) const {
    return acts_on(other.q0) || (other.q1 >= 0 && acts_on(other.q1));
  }
  /// Layers occupied in the depth metric: SWAP counts as its 3-CNOT
  /// decomposition, everything else as one layer.
  int duration() const { return kind == GateKind::SWAP ? 3 : 1; }

  bool same_op(const Gate &other) const {
    return kind == other.kind && q0 == other.q0 && q1 == other.q1 &&
           label == other.label;
  }
};

/// An ordered gate sequence over a fixed number of qubits, already mapped to
/// physical indices. Gate ids are dense in [0, size()) but are labels, not
/// positions: commutation edits move gates while their ids follow them.
/// Values are immutable once built; every edit returns a new circuit.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0) throw InvalidArgument("negative qubit count");
  }

  int num_qubits() const { return num_qubits_; }
  size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate> &gates() const { return gates_; }
  const Gate &gate(size_t pos) const { return gates_[pos]; }

  /// Appends a gate, assigning the next dense id.
  Circuit &add(GateKind kind, int q0, int q1 = -1, std::string label = {});
  Circuit &add_cnot(int control, int target) {
    return add(GateKind::CNOT, control, target);
  }
  Circuit &add_swap(int a, int b) { return add(GateKind::SWAP, a, b); }

  /// Rebuilds from an explicit gate order, reassigning dense ids in order.
  static Circuit from_gates(int num_qubits, const std::vector<Gate> &gates);

  /// Same gate order but with the given id values kept as-is. Caller
  /// guarantees ids are unique and dense.
  static Circuit from_gates_keep_ids(int num_qubits,
                                     std::vector<Gate> gates);

  /// Position of a gate id in the current order.
  size_t position_of(int id) const;

  bool operator==(const Circuit &other) const;

  /// Equality ignoring id values (same length, same ops in order).
  bool same_ops(const Circuit &other) const;

 private:
  void check_gate(GateKind kind, int q0, int q1) const;

  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// ASAP layering. A gate occupies layers [layer_of[id], layer_of[id] +
/// duration); SWAP therefore appears in three consecutive layer sets, which
/// makes the layer count equal to the depth of the SWAP-decomposed circuit.
struct Layering {
  std::vector<std::vector<int>> layers;  // gate ids occupying each layer
  std::vector<int> layer_of;             // gate id -> start layer
  int depth() const { return static_cast<int>(layers.size()); }
};

Layering layering(const Circuit &c);

/// Number of ASAP layers with SWAP counted as 3 CNOT layers; 0 when empty.
int depth(const Circuit &c);

/// Replaces every SWAP(a,b) by CNOT(a,b), CNOT(b,a), CNOT(a,b) in place.
Circuit decompose_swaps(const Circuit &c);

/// For each gate id, whether the gate is (transitively) ordered after some
/// gate of `window_ids` through per-qubit dependency chains. Window gates
/// themselves are reported as false.
std::vector<bool> after_window(const Circuit &c,
                               const std::vector<int> &window_ids);

/// Mirror image of after_window: gates some window gate depends on.
std::vector<bool> before_window(const Circuit &c,
                                const std::vector<int> &window_ids);

/// True when no gate outside the window is ordered between two window gates
/// (dependency contiguity), i.e. the window can be treated as one block.
bool window_contiguous(const Circuit &c, const std::vector<int> &window_ids);

/// Removes the window gates and splices `replacement` as a block at
/// `anchor` (an index into the list of kept gates). Kept gates that depend
/// on the window are placed after the replacement regardless of anchor, and
/// gates the window depends on stay in front; everything else keeps its
/// relative order. Fresh dense ids are assigned.
Circuit replace_window(const Circuit &c, const std::vector<int> &window_ids,
                       const Circuit &replacement, size_t anchor);

/// replace_window plus the id translation for the kept gates
/// (id_map[old_id] == -1 for removed window gates).
struct ReplaceResult {
  Circuit circuit;
  std::vector<int> id_map;
};
ReplaceResult replace_window_mapped(const Circuit &c,
                                    const std::vector<int> &window_ids,
                                    const Circuit &replacement, size_t anchor);

}  // namespace ssr
