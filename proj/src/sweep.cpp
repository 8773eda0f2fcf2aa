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

#include "ssr/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>

namespace ssr {

namespace {

struct OpenBlock {
  std::vector<int> gate_positions;
  std::set<int> qubits;
  std::set<int> sealed;
  int first_pos;
  int last_pos;
};

}  // namespace

std::vector<SubcircuitWindow> extract_subcircuits(const Circuit &c,
                                                  const ArchitectureGraph &,
                                                  int n_q) {
  if (n_q < 2) throw InvalidArgument("window qubit cap must be >= 2");

  std::vector<std::unique_ptr<OpenBlock>> open;
  std::vector<OpenBlock *> owner(c.num_qubits(), nullptr);
  std::vector<std::unique_ptr<OpenBlock>> closed;

  auto close_block = [&](OpenBlock *b) {
    for (int q : b->qubits)
      if (owner[q] == b) owner[q] = nullptr;
    auto it = std::find_if(open.begin(), open.end(),
                           [b](const auto &p) { return p.get() == b; });
    closed.push_back(std::move(*it));
    open.erase(it);
  };

  for (size_t pos = 0; pos < c.size(); ++pos) {
    const Gate &g = c.gate(pos);
    if (!is_linear(g.kind)) {
      OpenBlock *b = owner[g.q0];
      if (b) {
        b->sealed.insert(g.q0);
        owner[g.q0] = nullptr;
      }
      continue;
    }

    // Candidate blocks reachable through currently owned qubits, minus any
    // whose sealed set the gate touches.
    std::vector<OpenBlock *> cands;
    for (int q : {g.q0, g.q1}) {
      OpenBlock *b = owner[q];
      if (b && std::find(cands.begin(), cands.end(), b) == cands.end())
        cands.push_back(b);
    }
    cands.erase(std::remove_if(cands.begin(), cands.end(),
                               [&](OpenBlock *b) {
                                 return b->sealed.count(g.q0) ||
                                        b->sealed.count(g.q1);
                               }),
                cands.end());

    // Two blocks may only merge if neither was sealed on a qubit the other
    // uses; otherwise the union would straddle the sealing gate. Keep the
    // more recently extended block.
    if (cands.size() == 2) {
      auto straddles = [](OpenBlock *x, OpenBlock *y) {
        for (int q : x->sealed)
          if (y->qubits.count(q)) return true;
        return false;
      };
      if (straddles(cands[0], cands[1]) || straddles(cands[1], cands[0]))
        cands.erase(cands[0]->last_pos < cands[1]->last_pos ? cands.begin()
                                                            : cands.begin() + 1);
    }

    // Any other open block that ever used one of this gate's qubits must
    // close now: a later gate of that block would be dependency-ordered
    // after this one, splitting the block around it.
    for (size_t i = open.size(); i-- > 0;) {
      OpenBlock *b = open[i].get();
      if (std::find(cands.begin(), cands.end(), b) != cands.end()) continue;
      if (b->qubits.count(g.q0) || b->qubits.count(g.q1)) close_block(b);
    }

    auto union_size = [&]() {
      std::set<int> u{g.q0, g.q1};
      for (OpenBlock *b : cands) u.insert(b->qubits.begin(), b->qubits.end());
      return static_cast<int>(u.size());
    };

    while (union_size() > n_q) {
      // Cap exceeded: close the candidate whose most recent gate is oldest.
      auto victim = std::min_element(
          cands.begin(), cands.end(),
          [](OpenBlock *a, OpenBlock *b) { return a->last_pos < b->last_pos; });
      OpenBlock *v = *victim;
      cands.erase(victim);
      close_block(v);
    }

    OpenBlock *target;
    if (cands.empty()) {
      open.push_back(std::make_unique<OpenBlock>());
      target = open.back().get();
      target->first_pos = static_cast<int>(pos);
    } else {
      target = cands[0];
      for (size_t i = 1; i < cands.size(); ++i) {
        OpenBlock *other = cands[i];
        target->gate_positions.insert(target->gate_positions.end(),
                                      other->gate_positions.begin(),
                                      other->gate_positions.end());
        target->qubits.insert(other->qubits.begin(), other->qubits.end());
        target->sealed.insert(other->sealed.begin(), other->sealed.end());
        target->first_pos = std::min(target->first_pos, other->first_pos);
        for (int q : other->qubits)
          if (owner[q] == other) owner[q] = target;
        auto it = std::find_if(open.begin(), open.end(), [other](const auto &p) {
          return p.get() == other;
        });
        open.erase(it);
      }
    }
    target->gate_positions.push_back(static_cast<int>(pos));
    target->qubits.insert(g.q0);
    target->qubits.insert(g.q1);
    target->last_pos = static_cast<int>(pos);
    if (!target->sealed.count(g.q0)) owner[g.q0] = target;
    if (!target->sealed.count(g.q1)) owner[g.q1] = target;
  }
  while (!open.empty()) close_block(open.front().get());

  std::sort(closed.begin(), closed.end(), [](const auto &a, const auto &b) {
    return a->first_pos < b->first_pos;
  });

  Layering host = layering(c);
  std::vector<SubcircuitWindow> windows;
  for (const auto &b : closed) {
    SubcircuitWindow w;
    std::sort(b->gate_positions.begin(), b->gate_positions.end());
    int cnots = 0;
    w.span_start = std::numeric_limits<int>::max();
    w.span_end = 0;
    for (int pos : b->gate_positions) {
      const Gate &g = c.gate(pos);
      w.gate_ids.push_back(g.id);
      cnots += g.kind == GateKind::SWAP ? 3 : 1;
      int start = host.layer_of[g.id];
      w.span_start = std::min(w.span_start, start);
      w.span_end = std::max(w.span_end, start + g.duration());
    }
    w.qubits.assign(b->qubits.begin(), b->qubits.end());
    w.anchor = static_cast<size_t>(b->first_pos);
    w.single_cnot = cnots == 1;
    windows.push_back(std::move(w));
  }
  return windows;
}

int count_subcircuits(const Circuit &c, const ArchitectureGraph &ag, int n_q) {
  return static_cast<int>(extract_subcircuits(c, ag, n_q).size());
}

GF2Matrix window_matrix(const Circuit &c, const SubcircuitWindow &w) {
  std::map<int, int> local;
  for (size_t i = 0; i < w.qubits.size(); ++i)
    local[w.qubits[i]] = static_cast<int>(i);
  Circuit sub(static_cast<int>(w.qubits.size()));
  for (int id : w.gate_ids) {
    const Gate &g = c.gate(c.position_of(id));
    sub.add(g.kind, local.at(g.q0), local.at(g.q1));
  }
  return from_circuit(sub, static_cast<int>(w.qubits.size()));
}

SubcircuitScore score_window(const Circuit &c, const ArchitectureGraph &ag,
                             const SubcircuitWindow &w,
                             DepthPredictor &predictor) {
  SubcircuitScore result;
  result.window = w;
  if (w.single_cnot) {
    result.score = SubcircuitScore::kNeverSelect;
    result.d_opt_est = 1;
    return result;
  }
  std::vector<bool> in_window(c.size(), false);
  for (int id : w.gate_ids) in_window[id] = true;
  Circuit rest(c.num_qubits());
  for (const Gate &g : c.gates())
    if (!in_window[g.id]) rest.add(g.kind, g.q0, g.q1, g.label);

  auto [wag, mapping] = induced_subgraph(ag, w.qubits);
  (void)mapping;
  result.d_opt_est = predictor.predict(window_matrix(c, w), wag);
  result.score = depth(c) - depth(rest) - result.d_opt_est;
  return result;
}

std::vector<SubcircuitWindow> select_top(
    const std::vector<SubcircuitScore> &scores, double n_t) {
  if (n_t <= 0.0 || n_t > 1.0)
    throw InvalidArgument("selection fraction must be in (0, 1]");
  std::vector<const SubcircuitScore *> order;
  for (const auto &s : scores)
    if (s.score != SubcircuitScore::kNeverSelect) order.push_back(&s);
  std::sort(order.begin(), order.end(),
            [](const SubcircuitScore *a, const SubcircuitScore *b) {
              if (a->score != b->score) return a->score > b->score;
              return a->window.anchor < b->window.anchor;
            });
  size_t k = static_cast<size_t>(
      std::ceil(n_t * static_cast<double>(scores.size())));
  if (order.size() > k) order.resize(k);
  std::vector<SubcircuitWindow> selected;
  selected.reserve(order.size());
  for (const auto *s : order) selected.push_back(s->window);
  return selected;
}

}  // namespace ssr
