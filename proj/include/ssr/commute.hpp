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
#include <vector>

#include "ssr/arch.hpp"
#include "ssr/circuit.hpp"
#include "ssr/rng.hpp"

namespace ssr {

/// Two gate ids to exchange; the gates must be dependency-adjacent when the
/// pair is applied.
struct CommutationPair {
  int first;
  int second;

  bool same_pair(const CommutationPair &other) const {
    return (first == other.first && second == other.second) ||
           (first == other.second && second == other.first);
  }
};

enum class CommuteStatus {
  Ok,
  NotAdjacent,   // intervening gate on a qubit of either gate
  NoRule,        // gates adjacent but no SWAP/CNOT rule applies
  Connectivity,  // relabeled CNOT would leave the architecture edges
};

struct CommuteResult {
  CommuteStatus status;
  std::optional<Circuit> circuit;

  bool ok() const { return status == CommuteStatus::Ok; }
};

/// Exchanges two adjacent gates per the generalized SWAP/CNOT rules:
/// (a) CNOTs with a shared control (or shared target) swap freely;
/// (b) a single-qubit gate crosses a SWAP, relocating to the partner wire;
/// (c) a CNOT inside a SWAP's qubit pair crosses with both operands
///     relabeled through the swap;
/// (d) a CNOT sharing one qubit with a SWAP crosses with that operand
///     relabeled.
/// Rewrites that would place a CNOT off an architecture edge are rejected.
CommuteResult try_commute(const Circuit &c, const ArchitectureGraph &ag,
                          CommutationPair pair);

/// All pairs try_commute would currently accept, in a deterministic order.
std::vector<CommutationPair> applicable_pairs(const Circuit &c,
                                              const ArchitectureGraph &ag);

/// A GA candidate: the commutation sequence and its replayed circuit.
struct CommutationGenome {
  std::vector<CommutationPair> pairs;
  Circuit circuit;
};

struct GaParams {
  int n_species = 10;
  double alpha = 0.9;     // depth/subcircuit-count trade-off
  double alpha_mu = 0.4;  // mutation rate
  int t_max = 50;
  int t_idle = 15;
  uint64_t seed = 0;
};

struct FitnessBreakdown {
  double r_dpt;  // relative depth reduction
  double r_sub;  // relative reduction of extracted subcircuit count
  double fit;    // alpha * r_dpt + (1 - alpha) * r_sub
};

FitnessBreakdown fitness(const Circuit &base, const Circuit &candidate,
                         const ArchitectureGraph &ag, double alpha, int n_q);

/// Replays base, then applies the donor's pairs in order, skipping pairs
/// already present in the accumulated sequence and pairs that fail.
CommutationGenome crossover(const CommutationGenome &base,
                            const CommutationGenome &donor, const Circuit &c0,
                            const ArchitectureGraph &ag);

/// Appends 1..3 random applicable pairs (unchanged when none applies).
CommutationGenome mutate(const CommutationGenome &genome, const Circuit &c0,
                         const ArchitectureGraph &ag, Rng &rng);

struct GaResult {
  Circuit circuit;
  CommutationGenome genome;
  FitnessBreakdown best_fitness;
  std::vector<double> best_fit_history;  // per generation, non-decreasing
  int iterations = 0;
};

/// Genetic search over commutation sequences: 3*n_species random genomes
/// (plus the empty genome), elitist truncation to n_species, then per
/// generation floor(alpha_mu*n_species) mutations and the remaining count
/// crossovers with random partners, until t_max generations or t_idle
/// generations without improvement.
GaResult ga_optimize(const Circuit &c0, const ArchitectureGraph &ag,
                     const GaParams &params, int n_q);

}  // namespace ssr
