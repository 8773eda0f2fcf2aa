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

#include "ssr/circuit.hpp"

#include <algorithm>
#include <unordered_set>

namespace ssr {

const char *gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::Rz:
      return "rz";
    case GateKind::U:
      return "u";
    case GateKind::CNOT:
      return "cx";
    case GateKind::SWAP:
      return "swap";
  }
  return "?";
}

void Circuit::check_gate(GateKind kind, int q0, int q1) const {
  if (q0 < 0 || q0 >= num_qubits_)
    throw InvalidArgument("qubit index out of range");
  if (is_two_qubit(kind)) {
    if (q1 < 0 || q1 >= num_qubits_)
      throw InvalidArgument("qubit index out of range");
    if (q0 == q1) throw InvalidArgument("two-qubit gate with equal operands");
  } else if (q1 >= 0) {
    throw InvalidArgument("single-qubit gate with two operands");
  }
}

Circuit &Circuit::add(GateKind kind, int q0, int q1, std::string label) {
  check_gate(kind, q0, q1);
  Gate g;
  g.id = static_cast<int>(gates_.size());
  g.kind = kind;
  g.q0 = q0;
  g.q1 = is_two_qubit(kind) ? q1 : -1;
  g.label = std::move(label);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit Circuit::from_gates(int num_qubits, const std::vector<Gate> &gates) {
  Circuit c(num_qubits);
  for (const Gate &g : gates) c.add(g.kind, g.q0, g.q1, g.label);
  return c;
}

Circuit Circuit::from_gates_keep_ids(int num_qubits, std::vector<Gate> gates) {
  Circuit c(num_qubits);
  for (const Gate &g : gates) c.check_gate(g.kind, g.q0, g.q1);
  std::unordered_set<int> ids;
  for (const Gate &g : gates) {
    if (g.id < 0 || g.id >= static_cast<int>(gates.size()) ||
        !ids.insert(g.id).second)
      throw InvalidArgument("gate ids not unique and dense");
  }
  c.gates_ = std::move(gates);
  return c;
}

size_t Circuit::position_of(int id) const {
  for (size_t i = 0; i < gates_.size(); ++i)
    if (gates_[i].id == id) return i;
  throw InvalidArgument("no gate with id " + std::to_string(id));
}

bool Circuit::operator==(const Circuit &other) const {
  if (num_qubits_ != other.num_qubits_ || gates_.size() != other.gates_.size())
    return false;
  for (size_t i = 0; i < gates_.size(); ++i) {
    if (gates_[i].id != other.gates_[i].id ||
        !gates_[i].same_op(other.gates_[i]))
      return false;
  }
  return true;
}

bool Circuit::same_ops(const Circuit &other) const {
  if (num_qubits_ != other.num_qubits_ || gates_.size() != other.gates_.size())
    return false;
  for (size_t i = 0; i < gates_.size(); ++i)
    if (!gates_[i].same_op(other.gates_[i])) return false;
  return true;
}

Layering layering(const Circuit &c) {
  Layering result;
  result.layer_of.assign(c.size(), 0);
  std::vector<int> free_at(c.num_qubits(), 0);
  int total = 0;
  for (const Gate &g : c.gates()) {
    int start = free_at[g.q0];
    if (g.q1 >= 0) start = std::max(start, free_at[g.q1]);
    int end = start + g.duration();
    result.layer_of[g.id] = start;
    free_at[g.q0] = end;
    if (g.q1 >= 0) free_at[g.q1] = end;
    total = std::max(total, end);
  }
  result.layers.assign(total, {});
  for (const Gate &g : c.gates()) {
    int start = result.layer_of[g.id];
    for (int l = start; l < start + g.duration(); ++l)
      result.layers[l].push_back(g.id);
  }
  return result;
}

int depth(const Circuit &c) {
  std::vector<int> free_at(c.num_qubits(), 0);
  int total = 0;
  for (const Gate &g : c.gates()) {
    int start = free_at[g.q0];
    if (g.q1 >= 0) start = std::max(start, free_at[g.q1]);
    int end = start + g.duration();
    free_at[g.q0] = end;
    if (g.q1 >= 0) free_at[g.q1] = end;
    total = std::max(total, end);
  }
  return total;
}

Circuit decompose_swaps(const Circuit &c) {
  Circuit out(c.num_qubits());
  for (const Gate &g : c.gates()) {
    if (g.kind == GateKind::SWAP) {
      out.add_cnot(g.q0, g.q1);
      out.add_cnot(g.q1, g.q0);
      out.add_cnot(g.q0, g.q1);
    } else {
      out.add(g.kind, g.q0, g.q1, g.label);
    }
  }
  return out;
}

namespace {

std::vector<bool> window_membership(const Circuit &c,
                                    const std::vector<int> &window_ids) {
  std::vector<bool> in_window(c.size(), false);
  for (int id : window_ids) {
    if (id < 0 || id >= static_cast<int>(c.size()))
      throw InvalidArgument("window gate id out of range");
    in_window[id] = true;
  }
  return in_window;
}

}  // namespace

std::vector<bool> after_window(const Circuit &c,
                               const std::vector<int> &window_ids) {
  std::vector<bool> in_window = window_membership(c, window_ids);
  std::vector<bool> after(c.size(), false);
  // taint[q]: the chain head on q is a window gate or transitively after one.
  std::vector<bool> taint(c.num_qubits(), false);
  for (const Gate &g : c.gates()) {
    bool w = in_window[g.id];
    bool a = !w && (taint[g.q0] || (g.q1 >= 0 && taint[g.q1]));
    after[g.id] = a;
    taint[g.q0] = w || a;
    if (g.q1 >= 0) taint[g.q1] = w || a;
  }
  return after;
}

std::vector<bool> before_window(const Circuit &c,
                                const std::vector<int> &window_ids) {
  std::vector<bool> in_window = window_membership(c, window_ids);
  std::vector<bool> before(c.size(), false);
  std::vector<bool> taint(c.num_qubits(), false);
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    const Gate &g = *it;
    bool w = in_window[g.id];
    bool b = !w && (taint[g.q0] || (g.q1 >= 0 && taint[g.q1]));
    before[g.id] = b;
    taint[g.q0] = w || b;
    if (g.q1 >= 0) taint[g.q1] = w || b;
  }
  return before;
}

bool window_contiguous(const Circuit &c, const std::vector<int> &window_ids) {
  std::vector<bool> in_window = window_membership(c, window_ids);
  std::vector<bool> after = after_window(c, window_ids);
  std::vector<bool> before = before_window(c, window_ids);
  for (const Gate &g : c.gates())
    if (!in_window[g.id] && after[g.id] && before[g.id]) return false;
  return true;
}

Circuit replace_window(const Circuit &c, const std::vector<int> &window_ids,
                       const Circuit &replacement, size_t anchor) {
  return replace_window_mapped(c, window_ids, replacement, anchor).circuit;
}

ReplaceResult replace_window_mapped(const Circuit &c,
                                    const std::vector<int> &window_ids,
                                    const Circuit &replacement,
                                    size_t anchor) {
  if (replacement.num_qubits() != c.num_qubits())
    throw InvalidArgument("replacement qubit count mismatch");
  std::vector<bool> in_window = window_membership(c, window_ids);
  if (!window_contiguous(c, window_ids))
    throw InvalidArgument("window is not dependency-contiguous");

  std::vector<bool> window_qubits(c.num_qubits(), false);
  for (const Gate &g : c.gates())
    if (in_window[g.id]) {
      window_qubits[g.q0] = true;
      if (g.q1 >= 0) window_qubits[g.q1] = true;
    }
  for (const Gate &g : replacement.gates()) {
    if (!window_qubits[g.q0] || (g.q1 >= 0 && !window_qubits[g.q1]))
      throw InvalidArgument("replacement touches qubits outside the window");
  }

  std::vector<bool> after = after_window(c, window_ids);
  std::vector<bool> before = before_window(c, window_ids);

  // Kept gates that the window depends on go in front, gates depending on
  // the window go behind; unrelated gates split at the anchor.
  std::vector<const Gate *> head, tail;
  size_t kept_index = 0;
  for (const Gate &g : c.gates()) {
    if (in_window[g.id]) continue;
    bool to_tail = after[g.id] || (!before[g.id] && kept_index >= anchor);
    (to_tail ? tail : head).push_back(&g);
    ++kept_index;
  }

  Circuit out(c.num_qubits());
  for (const Gate *g : head) out.add(g->kind, g->q0, g->q1, g->label);
  for (const Gate &g : replacement.gates()) out.add(g.kind, g.q0, g.q1, g.label);
  for (const Gate *g : tail) out.add(g->kind, g->q0, g->q1, g->label);

  ReplaceResult result{std::move(out), std::vector<int>(c.size(), -1)};
  int new_id = 0;
  for (const Gate *g : head) result.id_map[g->id] = new_id++;
  new_id += static_cast<int>(replacement.size());
  for (const Gate *g : tail) result.id_map[g->id] = new_id++;
  return result;
}

}  // namespace ssr
