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
#include <utility>
#include <vector>

#include "ssr/error.hpp"

namespace ssr {

/// Undirected graph of physical qubits; edges are the allowed two-qubit
/// interaction pairs. Immutable after construction.
class ArchitectureGraph {
 public:
  ArchitectureGraph() = default;
  ArchitectureGraph(int num_qubits,
                    const std::vector<std::pair<int, int>> &edges);

  /// rows x cols nodes in row-major order, edges between grid neighbours.
  static ArchitectureGraph grid(int rows, int cols);

  /// Path graph 0-1-...-(n-1).
  static ArchitectureGraph path(int n);

  /// Edge-list format: first line node count, then "a b" lines; '#' starts a
  /// comment. Duplicate edges are dropped silently.
  static ArchitectureGraph from_edge_list(const std::string &text);

  int num_qubits() const { return num_qubits_; }
  const std::vector<std::pair<int, int>> &edges() const { return edges_; }
  size_t num_edges() const { return edges_.size(); }
  bool has_edge(int a, int b) const;
  const std::vector<int> &neighbors(int q) const { return adj_[q]; }
  bool connected() const;

  std::string to_edge_list() const;

 private:
  int num_qubits_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized a < b, sorted
  std::vector<std::vector<int>> adj_;
};

/// Subgraph induced by `qubits` (distinct), relabeled 0..k-1 in the given
/// order; second member maps new index -> original qubit.
std::pair<ArchitectureGraph, std::vector<int>> induced_subgraph(
    const ArchitectureGraph &ag, const std::vector<int> &qubits);

/// Isomorphism-invariant key for graphs with up to 5 nodes: the
/// lexicographically smallest upper-triangle adjacency bitstring over all
/// node relabelings, prefixed with the node count.
std::string canonical_key(const ArchitectureGraph &ag);

}  // namespace ssr
