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

#include "ssr/commute.hpp"

#include <algorithm>

#include "ssr/sweep.hpp"

namespace ssr {

namespace {

// Per-position previous/next gate position on each operand qubit; -1 when
// none. Slot 0 refers to q0, slot 1 to q1.
struct Chains {
  std::vector<std::array<int, 2>> prev, next;
};

Chains build_chains(const Circuit &c) {
  Chains ch;
  ch.prev.assign(c.size(), {-1, -1});
  ch.next.assign(c.size(), {-1, -1});
  std::vector<int> last(c.num_qubits(), -1);
  for (size_t p = 0; p < c.size(); ++p) {
    const Gate &g = c.gate(p);
    int qs[2] = {g.q0, g.q1};
    for (int s = 0; s < 2; ++s) {
      int q = qs[s];
      if (q < 0) continue;
      int lp = last[q];
      ch.prev[p][s] = lp;
      if (lp >= 0) {
        const Gate &prev_gate = c.gate(lp);
        ch.next[lp][prev_gate.q0 == q ? 0 : 1] = static_cast<int>(p);
      }
      last[q] = static_cast<int>(p);
    }
  }
  return ch;
}

// Nothing between p1 and p2 on any qubit of the gate at p1 (condition for
// moving it forward to p2).
bool clear_forward(const Circuit &c, const Chains &ch, size_t p1, size_t p2) {
  const Gate &g = c.gate(p1);
  const Gate &h = c.gate(p2);
  int qs[2] = {g.q0, g.q1};
  for (int s = 0; s < 2; ++s) {
    if (qs[s] < 0) continue;
    int nxt = ch.next[p1][s];
    if (h.acts_on(qs[s])) {
      if (nxt != static_cast<int>(p2)) return false;
    } else if (nxt >= 0 && nxt < static_cast<int>(p2)) {
      return false;
    }
  }
  return true;
}

// Nothing between p1 and p2 on any qubit of the gate at p2.
bool clear_backward(const Circuit &c, const Chains &ch, size_t p1, size_t p2) {
  const Gate &g = c.gate(p1);
  const Gate &h = c.gate(p2);
  int qs[2] = {h.q0, h.q1};
  for (int s = 0; s < 2; ++s) {
    if (qs[s] < 0) continue;
    int prv = ch.prev[p2][s];
    if (g.acts_on(qs[s])) {
      if (prv != static_cast<int>(p1)) return false;
    } else if (prv > static_cast<int>(p1)) {
      return false;
    }
  }
  return true;
}

int swap_partner(const Gate &swap, int q) {
  return swap.q0 == q ? swap.q1 : swap.q0;
}

// The exchanged pair (second gate first), or nothing when no rule matches.
// `first` executes before `second` in the input.
std::optional<std::pair<Gate, Gate>> exchange_rule(const Gate &first,
                                                   const Gate &second) {
  const bool first_2q = is_two_qubit(first.kind);
  const bool second_2q = is_two_qubit(second.kind);

  // (a) CNOT pair with shared control or shared target.
  if (first.kind == GateKind::CNOT && second.kind == GateKind::CNOT) {
    bool shared_control = first.q0 == second.q0 && first.q1 != second.q1;
    bool shared_target = first.q1 == second.q1 && first.q0 != second.q0;
    if ((shared_control && first.q1 != second.q0 && second.q1 != first.q0) ||
        (shared_target && first.q0 != second.q1 && second.q0 != first.q1))
      return std::make_pair(second, first);
    return std::nullopt;
  }

  // (b) single-qubit gate across a SWAP.
  if (!first_2q && second.kind == GateKind::SWAP) {
    Gate moved = first;
    moved.q0 = swap_partner(second, first.q0);
    return std::make_pair(second, moved);
  }
  if (first.kind == GateKind::SWAP && !second_2q) {
    Gate moved = second;
    moved.q0 = swap_partner(first, second.q0);
    return std::make_pair(moved, first);
  }

  // (c)/(d) CNOT across a SWAP: operands inside the swap pair relabel.
  auto conjugate = [](const Gate &cnot, const Gate &swap) {
    Gate out = cnot;
    if (out.q0 == swap.q0 || out.q0 == swap.q1)
      out.q0 = swap_partner(swap, out.q0);
    if (out.q1 == swap.q0 || out.q1 == swap.q1)
      out.q1 = swap_partner(swap, out.q1);
    return out;
  };
  if (first.kind == GateKind::CNOT && second.kind == GateKind::SWAP)
    return std::make_pair(second, conjugate(first, second));
  if (first.kind == GateKind::SWAP && second.kind == GateKind::CNOT)
    return std::make_pair(conjugate(second, first), first);

  return std::nullopt;
}

bool edge_compliant(const Gate &g, const ArchitectureGraph &ag) {
  return !is_two_qubit(g.kind) || ag.has_edge(g.q0, g.q1);
}

struct CommuteCheck {
  CommuteStatus status;
  Gate h_new, g_new;  // the exchanged pair, valid when status == Ok
  bool move_backward;  // true: pair lands at p1; false: after the middle
};

CommuteCheck commute_check(const Circuit &c, const ArchitectureGraph &ag,
                           const Chains &chains, size_t p1, size_t p2) {
  const Gate &g = c.gate(p1);
  const Gate &h = c.gate(p2);
  CommuteCheck check{CommuteStatus::NotAdjacent, {}, {}, false};
  if (!g.shares_qubit(h)) return check;
  bool fwd = clear_forward(c, chains, p1, p2);
  bool bwd = clear_backward(c, chains, p1, p2);
  if (!fwd && !bwd) return check;

  auto exchanged = exchange_rule(g, h);
  if (!exchanged) {
    check.status = CommuteStatus::NoRule;
    return check;
  }
  if (!edge_compliant(exchanged->first, ag) ||
      !edge_compliant(exchanged->second, ag)) {
    check.status = CommuteStatus::Connectivity;
    return check;
  }
  check.status = CommuteStatus::Ok;
  check.h_new = exchanged->first;
  check.g_new = exchanged->second;
  check.move_backward = bwd;
  return check;
}

// Assemble: with a backward-clear move the pair lands at p1 and the
// in-between gates follow; otherwise the pair lands after them.
Circuit commute_build(const Circuit &c, const CommuteCheck &check, size_t p1,
                      size_t p2) {
  std::vector<Gate> out;
  out.reserve(c.size());
  for (size_t p = 0; p < p1; ++p) out.push_back(c.gate(p));
  if (check.move_backward) {
    out.push_back(check.h_new);
    out.push_back(check.g_new);
    for (size_t p = p1 + 1; p < p2; ++p) out.push_back(c.gate(p));
  } else {
    for (size_t p = p1 + 1; p < p2; ++p) out.push_back(c.gate(p));
    out.push_back(check.h_new);
    out.push_back(check.g_new);
  }
  for (size_t p = p2 + 1; p < c.size(); ++p) out.push_back(c.gate(p));
  return Circuit::from_gates_keep_ids(c.num_qubits(), std::move(out));
}

CommuteResult commute_at(const Circuit &c, const ArchitectureGraph &ag,
                         const Chains &chains, size_t p1, size_t p2) {
  CommuteCheck check = commute_check(c, ag, chains, p1, p2);
  if (check.status != CommuteStatus::Ok) return {check.status, std::nullopt};
  return {CommuteStatus::Ok, commute_build(c, check, p1, p2)};
}

}  // namespace

CommuteResult try_commute(const Circuit &c, const ArchitectureGraph &ag,
                          CommutationPair pair) {
  size_t p1 = c.position_of(pair.first);
  size_t p2 = c.position_of(pair.second);
  if (p1 == p2) throw InvalidArgument("commutation pair of one gate");
  if (p1 > p2) std::swap(p1, p2);
  Chains chains = build_chains(c);
  return commute_at(c, ag, chains, p1, p2);
}

std::vector<CommutationPair> applicable_pairs(const Circuit &c,
                                              const ArchitectureGraph &ag) {
  Chains chains = build_chains(c);
  std::vector<CommutationPair> pairs;
  for (size_t p = 0; p < c.size(); ++p) {
    int candidates[2] = {chains.next[p][0], chains.next[p][1]};
    if (candidates[0] == candidates[1]) candidates[1] = -1;
    for (int np : candidates) {
      if (np < 0) continue;
      if (commute_check(c, ag, chains, p, static_cast<size_t>(np)).status ==
          CommuteStatus::Ok)
        pairs.push_back({c.gate(p).id, c.gate(np).id});
    }
  }
  return pairs;
}

FitnessBreakdown fitness(const Circuit &base, const Circuit &candidate,
                         const ArchitectureGraph &ag, double alpha, int n_q) {
  int d_base = depth(base);
  if (d_base == 0) throw InvalidArgument("fitness needs a nonzero-depth base");
  int cs_base = count_subcircuits(base, ag, n_q);
  FitnessBreakdown fb;
  fb.r_dpt = static_cast<double>(d_base - depth(candidate)) / d_base;
  fb.r_sub =
      static_cast<double>(cs_base - count_subcircuits(candidate, ag, n_q)) /
      std::max(1, cs_base);
  fb.fit = alpha * fb.r_dpt + (1.0 - alpha) * fb.r_sub;
  return fb;
}

CommutationGenome crossover(const CommutationGenome &base,
                            const CommutationGenome &donor, const Circuit &c0,
                            const ArchitectureGraph &ag) {
  (void)c0;
  CommutationGenome out = base;
  for (const CommutationPair &pair : donor.pairs) {
    bool repeated = std::any_of(
        out.pairs.begin(), out.pairs.end(),
        [&](const CommutationPair &p) { return p.same_pair(pair); });
    if (repeated) continue;
    CommuteResult r = try_commute(out.circuit, ag, pair);
    if (!r.ok()) continue;
    out.circuit = std::move(*r.circuit);
    out.pairs.push_back(pair);
  }
  return out;
}

CommutationGenome mutate(const CommutationGenome &genome, const Circuit &c0,
                         const ArchitectureGraph &ag, Rng &rng) {
  (void)c0;
  CommutationGenome out = genome;
  int k = rng.uniform_int(1, 3);
  for (int i = 0; i < k; ++i) {
    auto pairs = applicable_pairs(out.circuit, ag);
    if (pairs.empty()) break;
    CommutationPair pick = pairs[rng.uniform_index(pairs.size())];
    CommuteResult r = try_commute(out.circuit, ag, pick);
    SSR_ASSERT(r.ok(), "enumerated pair must commute");
    out.circuit = std::move(*r.circuit);
    out.pairs.push_back(pick);
  }
  return out;
}

namespace {

CommutationGenome random_genome(const Circuit &c0, const ArchitectureGraph &ag,
                                Rng rng) {
  CommutationGenome g{{}, c0};
  int k = rng.uniform_int(1, 8);
  for (int i = 0; i < k; ++i) {
    auto pairs = applicable_pairs(g.circuit, ag);
    if (pairs.empty()) break;
    CommutationPair pick = pairs[rng.uniform_index(pairs.size())];
    CommuteResult r = try_commute(g.circuit, ag, pick);
    g.circuit = std::move(*r.circuit);
    g.pairs.push_back(pick);
  }
  return g;
}

struct Scored {
  CommutationGenome genome;
  FitnessBreakdown fb;
  size_t arrival;  // insertion order, the final tie-break
};

// Elitist order: fitness, then shorter genomes, then arrival.
bool better(const Scored &a, const Scored &b) {
  if (a.fb.fit != b.fb.fit) return a.fb.fit > b.fb.fit;
  if (a.genome.pairs.size() != b.genome.pairs.size())
    return a.genome.pairs.size() < b.genome.pairs.size();
  return a.arrival < b.arrival;
}

}  // namespace

GaResult ga_optimize(const Circuit &c0, const ArchitectureGraph &ag,
                     const GaParams &params, int n_q) {
  if (params.n_species < 1) throw InvalidArgument("population size must be >= 1");
  Rng master(params.seed);
  const size_t n = static_cast<size_t>(params.n_species);

  std::vector<Scored> population(3 * n);
  // The empty genome anchors fitness at zero: the result never falls below
  // the input circuit.
  population[0] = {{{}, c0}, {}, 0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 1; i < static_cast<long long>(3 * n); ++i) {
    population[i].genome = random_genome(c0, ag, master.split(i));
    population[i].arrival = i;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(population.size()); ++i)
    population[i].fb =
        fitness(c0, population[i].genome.circuit, ag, params.alpha, n_q);

  std::sort(population.begin(), population.end(), better);
  population.resize(n);
  Scored best = population[0];
  size_t arrivals = 3 * n;

  GaResult result;
  result.best_fit_history.push_back(best.fb.fit);

  int idle = 0;
  int iter = 0;
  for (; iter < params.t_max && idle < params.t_idle; ++iter) {
    const size_t n_mut = static_cast<size_t>(params.alpha_mu * params.n_species);
    const size_t n_cross = n - n_mut;

    // Disjoint mutation and crossover pools drawn from the population.
    std::vector<size_t> order(population.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng shuffle_rng = master.split(0x10000u + iter);
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[shuffle_rng.uniform_index(i)]);

    std::vector<size_t> partner(n_cross);
    for (size_t j = 0; j < n_cross; ++j) {
      partner[j] = shuffle_rng.uniform_index(population.size());
      if (population.size() > 1 && partner[j] == order[n_mut + j])
        partner[j] = (partner[j] + 1) % population.size();
    }

    std::vector<Scored> offspring(n_mut + n_cross);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long j = 0; j < static_cast<long long>(n_mut + n_cross); ++j) {
      Rng slot_rng = master.split((uint64_t(iter) << 20) ^ (0xbeefu + j));
      if (j < static_cast<long long>(n_mut)) {
        offspring[j].genome =
            mutate(population[order[j]].genome, c0, ag, slot_rng);
      } else {
        offspring[j].genome =
            crossover(population[order[j]].genome,
                      population[partner[j - n_mut]].genome, c0, ag);
      }
      offspring[j].fb =
          fitness(c0, offspring[j].genome.circuit, ag, params.alpha, n_q);
    }
    for (size_t j = 0; j < offspring.size(); ++j)
      offspring[j].arrival = arrivals++;

    population.insert(population.end(),
                      std::make_move_iterator(offspring.begin()),
                      std::make_move_iterator(offspring.end()));
    std::sort(population.begin(), population.end(), better);
    population.resize(n);

    if (population[0].fb.fit > best.fb.fit) {
      best = population[0];
      idle = 0;
    } else {
      ++idle;
    }
    result.best_fit_history.push_back(best.fb.fit);
  }

  result.circuit = best.genome.circuit;
  result.genome = std::move(best.genome);
  result.best_fitness = best.fb;
  result.iterations = iter;
  return result;
}

}  // namespace ssr
