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

#include "ssr/arch.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ssr {

ArchitectureGraph::ArchitectureGraph(
    int num_qubits, const std::vector<std::pair<int, int>> &edges)
    : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw InvalidArgument("negative qubit count");
  std::set<std::pair<int, int>> unique_edges;
  for (auto [a, b] : edges) {
    if (a == b) throw InvalidArgument("self-loop in architecture graph");
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits)
      throw InvalidArgument("edge endpoint out of range");
    unique_edges.insert({std::min(a, b), std::max(a, b)});
  }
  edges_.assign(unique_edges.begin(), unique_edges.end());
  adj_.assign(num_qubits, {});
  for (auto [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto &nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

ArchitectureGraph ArchitectureGraph::grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("grid dimensions must be >= 1");
  std::vector<std::pair<int, int>> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return ArchitectureGraph(rows * cols, edges);
}

ArchitectureGraph ArchitectureGraph::path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return ArchitectureGraph(n, edges);
}

ArchitectureGraph ArchitectureGraph::from_edge_list(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int count = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    if (count < 0) {
      if (!(ls >> count)) continue;  // skip blank/comment lines before header
      std::string rest;
      if (ls >> rest)
        throw ParseError("extra tokens after node count", line_no, 1);
      continue;
    }
    int a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw ParseError("expected two indices", line_no, 1);
    std::string rest;
    if (ls >> rest) throw ParseError("extra tokens on edge line", line_no, 1);
    if (a < 0 || b < 0 || a >= count || b >= count)
      throw ParseError("edge endpoint out of range", line_no, 1);
    if (a == b) throw ParseError("self-loop", line_no, 1);
    edges.emplace_back(a, b);
  }
  if (count < 0) throw ParseError("missing node count line");
  return ArchitectureGraph(count, edges);
}

bool ArchitectureGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{a, b});
}

bool ArchitectureGraph::connected() const {
  if (num_qubits_ == 0) return true;
  std::vector<bool> seen(num_qubits_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int r : adj_[q])
      if (!seen[r]) {
        seen[r] = true;
        ++visited;
        stack.push_back(r);
      }
  }
  return visited == num_qubits_;
}

std::string ArchitectureGraph::to_edge_list() const {
  std::ostringstream out;
  out << num_qubits_ << "\n";
  for (auto [a, b] : edges_) out << a << " " << b << "\n";
  return out.str();
}

std::pair<ArchitectureGraph, std::vector<int>> induced_subgraph(
    const ArchitectureGraph &ag, const std::vector<int> &qubits) {
  std::vector<int> local(ag.num_qubits(), -1);
  for (size_t i = 0; i < qubits.size(); ++i) {
    int q = qubits[i];
    if (q < 0 || q >= ag.num_qubits())
      throw InvalidArgument("qubit out of range");
    if (local[q] >= 0) throw InvalidArgument("duplicate qubit in selection");
    local[q] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : ag.edges())
    if (local[a] >= 0 && local[b] >= 0)
      edges.emplace_back(local[a], local[b]);
  return {ArchitectureGraph(static_cast<int>(qubits.size()), edges), qubits};
}

std::string canonical_key(const ArchitectureGraph &ag) {
  int n = ag.num_qubits();
  if (n > 5)
    throw InvalidArgument("canonical_key supports at most 5 qubits");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    key.reserve(n * (n - 1) / 2);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        key.push_back(ag.has_edge(perm[a], perm[b]) ? '1' : '0');
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

}  // namespace ssr
