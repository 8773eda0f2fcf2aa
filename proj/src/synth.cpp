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

#include "ssr/synth.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssr {

CnfInstance encode(const GF2Matrix &target, const ArchitectureGraph &ag,
                   int depth_budget,
                   const std::vector<BlockedPosition> &blocked) {
  if (depth_budget < 0) throw InvalidArgument("negative depth budget");
  if (target.dim() != ag.num_qubits())
    throw InvalidArgument("matrix dimension and qubit count differ");
  if (!is_invertible(target))
    throw InvalidArgument("synthesis target must be invertible");

  CnfInstance inst;
  int n = inst.n_ = target.dim();
  int depth = inst.depth_ = depth_budget;
  inst.gate_index_.assign(static_cast<size_t>(n) * n, -1);
  for (auto [a, b] : ag.edges()) {
    inst.gate_index_[a * n + b] = static_cast<int>(inst.gates_.size());
    inst.gates_.emplace_back(a, b);
    inst.gate_index_[b * n + a] = static_cast<int>(inst.gates_.size());
    inst.gates_.emplace_back(b, a);
  }
  int num_gates = static_cast<int>(inst.gates_.size());
  inst.gate_var_base_ = 1 + (depth + 1) * n * n;
  inst.formula.var_count = (depth + 1) * n * n + depth * num_gates;
  CnfFormula &f = inst.formula;

  // Boundary conditions.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int v0 = inst.matrix_var(0, i, k);
      f.add_clause({i == k ? v0 : -v0});
      int vd = inst.matrix_var(depth, i, k);
      f.add_clause({target.get(i, k) ? vd : -vd});
    }

  std::vector<std::vector<int>> involving(n), targeting(n);
  for (int g = 0; g < num_gates; ++g) {
    auto [c, t] = inst.gates_[g];
    involving[c].push_back(g);
    involving[t].push_back(g);
    targeting[t].push_back(g);
  }

  auto gv = [&](int d, int g) {
    return inst.gate_var_base_ + d * num_gates + g;
  };

  for (int d = 0; d < depth; ++d) {
    // At least one CNOT per layer.
    if (num_gates == 0) {
      int v = inst.matrix_var(0, 0, 0);
      f.add_clause({v});
      f.add_clause({-v});
      break;
    }
    std::vector<int> layer;
    for (int g = 0; g < num_gates; ++g) layer.push_back(gv(d, g));
    f.add_clause(layer);

    // Each qubit in at most one CNOT per layer.
    for (int q = 0; q < n; ++q)
      for (size_t a = 0; a < involving[q].size(); ++a)
        for (size_t b = a + 1; b < involving[q].size(); ++b)
          f.add_clause({-gv(d, involving[q][a]), -gv(d, involving[q][b])});

    // Gate implies row update: m(d+1,t,j) = m(d,t,j) xor m(d,c,j).
    for (int g = 0; g < num_gates; ++g) {
      auto [c, t] = inst.gates_[g];
      int G = gv(d, g);
      for (int j = 0; j < n; ++j) {
        int A = inst.matrix_var(d, t, j);
        int B = inst.matrix_var(d, c, j);
        int C = inst.matrix_var(d + 1, t, j);
        f.add_clause({-G, -A, -B, -C});
        f.add_clause({-G, -A, B, C});
        f.add_clause({-G, A, -B, C});
        f.add_clause({-G, A, B, -C});
      }
    }

    // A changed entry requires a CNOT targeting that row; with the
    // at-most-one constraint this makes the cause unique.
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        int A = inst.matrix_var(d, k, j);
        int C = inst.matrix_var(d + 1, k, j);
        std::vector<int> pos{-A, C}, neg{A, -C};
        for (int g : targeting[k]) {
          pos.push_back(gv(d, g));
          neg.push_back(gv(d, g));
        }
        f.add_clause(pos);
        f.add_clause(neg);
      }
  }

  for (const BlockedPosition &bp : blocked) {
    if (bp.d < 0 || bp.d >= depth) continue;
    if (bp.q < 0 || bp.q >= n)
      throw InvalidArgument("blocked qubit out of range");
    for (int g : involving[bp.q]) f.add_clause({-gv(bp.d, g)});
  }
  return inst;
}

Circuit decode(const CnfInstance &instance, const std::vector<bool> &model) {
  int n = instance.dim();
  Circuit out(n);
  std::vector<std::pair<int, int>> layer;
  for (int d = 0; d < instance.depth(); ++d) {
    layer.clear();
    for (auto [c, t] : instance.directed_gates())
      if (model[instance.gate_var(d, c, t)]) layer.emplace_back(c, t);
    std::sort(layer.begin(), layer.end());
    std::vector<bool> used(n, false);
    for (auto [c, t] : layer) {
      SSR_ASSERT(!used[c] && !used[t], "overlapping gates in decoded layer");
      used[c] = used[t] = true;
      out.add_cnot(c, t);
    }
  }
  return out;
}

namespace {

std::vector<int> decode_layers(const CnfInstance &instance,
                               const std::vector<bool> &model) {
  std::vector<int> layers;
  for (int d = 0; d < instance.depth(); ++d) {
    std::vector<std::pair<int, int>> layer;
    for (auto [c, t] : instance.directed_gates())
      if (model[instance.gate_var(d, c, t)]) layer.emplace_back(c, t);
    for (size_t i = 0; i < layer.size(); ++i) layers.push_back(d);
  }
  return layers;
}

}  // namespace

std::optional<SynthesisResult> synthesize(
    const GF2Matrix &target, const ArchitectureGraph &ag,
    const std::vector<BlockedPosition> &blocked, int d_pred,
    SatBackend &backend, int max_depth) {
  if (d_pred < 0) throw InvalidArgument("negative predicted depth");
  int n = target.dim();
  int cap = max_depth < 0 ? n * n : max_depth;
  SynthesisResult result;

  auto probe = [&](int d) -> std::optional<std::vector<bool>> {
    CnfInstance inst = encode(target, ag, d, blocked);
    ++result.sat_calls;
    SatResult r = backend.solve(inst.formula);
    if (!r.sat) return std::nullopt;
    return r.model;
  };
  auto finish = [&](int d, const std::vector<bool> &model) {
    CnfInstance inst = encode(target, ag, d, blocked);
    result.circuit = decode(inst, model);
    result.gate_layer = decode_layers(inst, model);
    result.achieved_depth = d;
    return result;
  };

  if (target.is_identity()) {
    // Depth 0 realizes the identity; one trivially satisfiable probe keeps
    // the call accounting uniform.
    auto m = probe(0);
    SSR_ASSERT(m.has_value(), "identity target must be satisfiable at 0");
    return finish(0, *m);
  }
  if (cap < 1) return std::nullopt;

  int d = std::min(std::max(d_pred, 1), cap);
  auto model = probe(d);
  if (!model && d > 1) {
    // One look below the failed prediction; depths of the opposite parity
    // can be satisfiable even when d itself is not.
    if (auto below = probe(d - 1)) {
      model = below;
      d -= 1;
    }
  }
  if (model) {
    // Descend until two consecutive depths fail. Any satisfiable depth
    // stays satisfiable two layers up (append a cancelling gate pair), so
    // once both parity classes below d are refuted, d is minimal.
    while (d > 1) {
      if (auto m1 = probe(d - 1)) {
        model = std::move(m1);
        d -= 1;
        continue;
      }
      if (d == 2) break;  // depth 0 needs the identity, excluded above
      if (auto m2 = probe(d - 2)) {
        model = std::move(m2);
        d -= 2;
        continue;
      }
      break;
    }
    return finish(d, *model);
  }
  while (d < cap) {
    ++d;
    if (auto m = probe(d)) return finish(d, *m);
  }
  if (blocked.empty() && cap >= n * n)
    throw InternalError("unblocked synthesis exhausted the depth cap");
  return std::nullopt;
}

std::vector<BlockedPosition> blocked_positions(const Circuit &c,
                                               const SubcircuitWindow &w,
                                               int horizon) {
  std::vector<bool> in_window(c.size(), false);
  for (int id : w.gate_ids) in_window[id] = true;
  std::vector<bool> after = after_window(c, w.gate_ids);

  std::vector<int> local(c.num_qubits(), -1);
  for (size_t i = 0; i < w.qubits.size(); ++i)
    local[w.qubits[i]] = static_cast<int>(i);

  // occupancy[q_local][d] over the aligned window [span_start, +horizon)
  std::vector<std::vector<bool>> occupied(
      w.qubits.size(), std::vector<bool>(std::max(horizon, 0), false));
  auto mark = [&](const Gate &g, int start) {
    for (int q : {g.q0, g.q1}) {
      if (q < 0 || local[q] < 0) continue;
      for (int l = start; l < start + g.duration(); ++l) {
        int rel = l - w.span_start;
        if (rel >= 0 && rel < horizon) occupied[local[q]][rel] = true;
      }
    }
  };

  // Gates the window depends on keep their earliest (ASAP) slots.
  {
    std::vector<int> free_at(c.num_qubits(), 0);
    for (const Gate &g : c.gates()) {
      if (in_window[g.id] || after[g.id]) continue;
      int start = free_at[g.q0];
      if (g.q1 >= 0) start = std::max(start, free_at[g.q1]);
      free_at[g.q0] = start + g.duration();
      if (g.q1 >= 0) free_at[g.q1] = start + g.duration();
      mark(g, start);
    }
  }

  // Gates depending on the window are pushed as late as a one-layer overall
  // improvement allows; slots they still need inside the window are blocked.
  {
    int deadline = depth(c) - 1;
    std::vector<int> free_from(c.num_qubits(), deadline);
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
      const Gate &g = *it;
      if (in_window[g.id] || !after[g.id]) continue;
      int end = free_from[g.q0];
      if (g.q1 >= 0) end = std::min(end, free_from[g.q1]);
      int start = end - g.duration();
      free_from[g.q0] = start;
      if (g.q1 >= 0) free_from[g.q1] = start;
      mark(g, start);
    }
  }

  std::vector<BlockedPosition> blocked;
  for (size_t q = 0; q < w.qubits.size(); ++q)
    for (int d = 0; d < horizon; ++d)
      if (occupied[q][d]) blocked.push_back({d, static_cast<int>(q)});
  return blocked;
}

std::vector<std::vector<std::pair<int, int>>> enumerate_layer_moves(
    const ArchitectureGraph &ag) {
  const auto &edges = ag.edges();
  std::vector<std::vector<std::pair<int, int>>> moves;
  std::vector<std::pair<int, int>> current;
  uint32_t used = 0;

  auto recurse = [&](auto &&self, size_t from) -> void {
    if (!current.empty()) moves.push_back(current);
    for (size_t e = from; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (used & ((1u << a) | (1u << b))) continue;
      used |= (1u << a) | (1u << b);
      current.emplace_back(a, b);
      self(self, e + 1);
      current.back() = {b, a};
      self(self, e + 1);
      current.pop_back();
      used &= ~((1u << a) | (1u << b));
    }
  };
  recurse(recurse, 0);
  return moves;
}

namespace {

uint32_t apply_move(uint32_t x, const std::vector<std::pair<int, int>> &move,
                    int n) {
  uint32_t row_mask = (1u << n) - 1;
  for (auto [c, t] : move)
    x ^= ((x >> (c * n)) & row_mask) << (t * n);
  return x;
}

bool move_blocked(const std::vector<std::pair<int, int>> &move, int d,
                  const std::vector<BlockedPosition> &blocked) {
  for (const auto &bp : blocked) {
    if (bp.d != d) continue;
    for (auto [c, t] : move)
      if (c == bp.q || t == bp.q) return true;
  }
  return false;
}

template <bool Parallel>
std::optional<int> bfs_oracle_impl(const GF2Matrix &target,
                                   const ArchitectureGraph &ag, int max_depth,
                                   const std::vector<BlockedPosition> *blocked) {
  int n = target.dim();
  if (n > 5) throw InvalidArgument("bfs_oracle supports at most 5 qubits");
  if (n != ag.num_qubits())
    throw InvalidArgument("matrix dimension and qubit count differ");
  uint32_t goal = target.pack();
  uint32_t start = GF2Matrix::identity(n).pack();
  if (goal == start) return 0;

  auto moves = enumerate_layer_moves(ag);
  bool has_blocks = blocked && !blocked->empty();
  size_t space = size_t{1} << (n * n);

  // visited stamps: plain visited flags without blocks, per-level stamps
  // with blocks (revisits at later depths can be profitable there because
  // the available moves depend on the depth).
  std::vector<uint8_t> stamp(space, 0xff);
  std::vector<uint32_t> frontier{start}, next;
  stamp[start] = has_blocks ? 0 : 1;

  for (int level = 0; level < max_depth; ++level) {
    std::vector<const std::vector<std::pair<int, int>> *> usable;
    for (const auto &mv : moves)
      if (!has_blocks || !move_blocked(mv, level, *blocked))
        usable.push_back(&mv);
    if (usable.empty()) {
      if (!has_blocks) break;
      return std::nullopt;  // a fully blocked layer cannot satisfy progress
    }
    next.clear();
    std::atomic<bool> found{false};
    uint8_t mark = has_blocks ? static_cast<uint8_t>((level + 1) & 0x7f) : 1;

#ifdef _OPENMP
#pragma omp parallel if (Parallel && frontier.size() > 32768)
#endif
    {
      std::vector<uint32_t> local_next;
#ifdef _OPENMP
#pragma omp for nowait
#endif
      for (long long i = 0; i < static_cast<long long>(frontier.size()); ++i) {
        uint32_t x = frontier[i];
        for (const auto *mv : usable) {
          uint32_t y = apply_move(x, *mv, n);
          if (y == goal) found.store(true, std::memory_order_relaxed);
          uint8_t expected = stamp[y];
          if (expected != mark) {
            bool claim;
#ifdef _OPENMP
            claim = __atomic_compare_exchange_n(&stamp[y], &expected, mark,
                                                false, __ATOMIC_RELAXED,
                                                __ATOMIC_RELAXED);
#else
            stamp[y] = mark;
            claim = true;
#endif
            if (claim) local_next.push_back(y);
          }
        }
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      next.insert(next.end(), local_next.begin(), local_next.end());
    }
    if (found.load()) return level + 1;
    if (next.empty()) return std::nullopt;
    frontier.swap(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> bfs_oracle(const GF2Matrix &target,
                              const ArchitectureGraph &ag, int max_depth,
                              const std::vector<BlockedPosition> *blocked) {
  return bfs_oracle_impl<true>(target, ag, max_depth, blocked);
}

std::optional<int> bfs_oracle_serial(const GF2Matrix &target,
                                     const ArchitectureGraph &ag,
                                     int max_depth,
                                     const std::vector<BlockedPosition>
                                         *blocked) {
  return bfs_oracle_impl<false>(target, ag, max_depth, blocked);
}

namespace {

template <bool Parallel>
std::vector<uint8_t> bfs_table_impl(const ArchitectureGraph &ag) {
  int n = ag.num_qubits();
  if (n < 1 || n > 5)
    throw InvalidArgument("distance tables support 1..5 qubits");
  auto moves = enumerate_layer_moves(ag);
  size_t space = size_t{1} << (n * n);
  std::vector<uint8_t> dist(space, 0xff);
  uint32_t start = GF2Matrix::identity(n).pack();
  dist[start] = 0;
  std::vector<uint32_t> frontier{start}, next;
  uint8_t level = 0;
  while (!frontier.empty() && level < 0xfe) {
    ++level;
    next.clear();
#ifdef _OPENMP
#pragma omp parallel if (Parallel && frontier.size() > 32768)
#endif
    {
      std::vector<uint32_t> local_next;
#ifdef _OPENMP
#pragma omp for nowait
#endif
      for (long long i = 0; i < static_cast<long long>(frontier.size()); ++i) {
        uint32_t x = frontier[i];
        for (const auto &mv : moves) {
          uint32_t y = apply_move(x, mv, n);
          uint8_t expected = 0xff;
#ifdef _OPENMP
          if (__atomic_compare_exchange_n(&dist[y], &expected, level, false,
                                          __ATOMIC_RELAXED, __ATOMIC_RELAXED))
            local_next.push_back(y);
#else
          if (dist[y] == 0xff) {
            dist[y] = level;
            local_next.push_back(y);
          }
#endif
        }
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      next.insert(next.end(), local_next.begin(), local_next.end());
    }
    frontier.swap(next);
  }
  return dist;
}

}  // namespace

std::vector<uint8_t> bfs_distance_table(const ArchitectureGraph &ag) {
  return bfs_table_impl<true>(ag);
}

std::vector<uint8_t> bfs_distance_table_serial(const ArchitectureGraph &ag) {
  return bfs_table_impl<false>(ag);
}

int bidirectional_depth(const GF2Matrix &target, const ArchitectureGraph &ag) {
  int n = target.dim();
  if (n > 5) throw InvalidArgument("bidirectional search supports <= 5 qubits");
  uint32_t start = GF2Matrix::identity(n).pack();
  uint32_t goal = target.pack();
  if (start == goal) return 0;
  auto moves = enumerate_layer_moves(ag);
  if (moves.empty()) throw InvalidArgument("target unreachable: no edges");

  // Layer moves are involutions, so the backward search uses the same moves.
  std::unordered_map<uint32_t, int> dist_fwd{{start, 0}}, dist_bwd{{goal, 0}};
  std::vector<uint32_t> frontier_fwd{start}, frontier_bwd{goal};
  int depth_fwd = 0, depth_bwd = 0;

  while (!frontier_fwd.empty() || !frontier_bwd.empty()) {
    bool expand_fwd = !frontier_fwd.empty() &&
                      (frontier_bwd.empty() ||
                       frontier_fwd.size() <= frontier_bwd.size());
    auto &frontier = expand_fwd ? frontier_fwd : frontier_bwd;
    auto &mine = expand_fwd ? dist_fwd : dist_bwd;
    auto &other = expand_fwd ? dist_bwd : dist_fwd;
    int next_depth = (expand_fwd ? depth_fwd : depth_bwd) + 1;

    std::vector<uint32_t> next;
    for (uint32_t x : frontier) {
      for (const auto &mv : moves) {
        uint32_t y = apply_move(x, mv, n);
        if (mine.emplace(y, next_depth).second) {
          auto hit = other.find(y);
          if (hit != other.end()) return next_depth + hit->second;
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
    (expand_fwd ? depth_fwd : depth_bwd) = next_depth;
    if (depth_fwd + depth_bwd > n * n + 2)
      throw InvalidArgument("target unreachable on this architecture");
  }
  throw InvalidArgument("target unreachable on this architecture");
}

}  // namespace ssr
