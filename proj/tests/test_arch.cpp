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

#include <doctest.h>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ssr/arch.hpp"

using namespace ssr;

namespace {

std::string read_data_file(const std::string &name) {
  std::ifstream in(std::string(SSR_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ArchitectureGraph permuted(const ArchitectureGraph &g,
                           const std::vector<int> &perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return ArchitectureGraph(g.num_qubits(), edges);
}

}  // namespace

TEST_CASE("grid node and edge counts") {
  ArchitectureGraph g54 = ArchitectureGraph::grid(5, 4);
  CHECK(g54.num_qubits() == 20);
  CHECK(g54.num_edges() == 31);  // 5*3 horizontal + 4*4 vertical

  ArchitectureGraph g11 = ArchitectureGraph::grid(1, 1);
  CHECK(g11.num_qubits() == 1);
  CHECK(g11.num_edges() == 0);

  ArchitectureGraph g33 = ArchitectureGraph::grid(3, 3);
  CHECK(g33.num_qubits() == 9);
  CHECK(g33.num_edges() == 12);
  CHECK(g33.has_edge(0, 1));
  CHECK(g33.has_edge(1, 0));
  CHECK_FALSE(g33.has_edge(0, 2));
}

TEST_CASE("neighbor symmetry") {
  ArchitectureGraph g = ArchitectureGraph::grid(3, 4);
  for (int q = 0; q < g.num_qubits(); ++q)
    for (int r : g.neighbors(q)) {
      const auto &back = g.neighbors(r);
      CHECK(std::find(back.begin(), back.end(), q) != back.end());
    }
}

TEST_CASE("edge list parsing") {
  ArchitectureGraph path3 = ArchitectureGraph::from_edge_list("3\n0 1\n1 2\n");
  CHECK(path3.num_qubits() == 3);
  CHECK(path3.num_edges() == 2);

  // comments, duplicates and reversed duplicates
  ArchitectureGraph g = ArchitectureGraph::from_edge_list(
      "# a path\n4\n0 1\n1 0\n1 2\n2 3 # tail\n2 3\n");
  CHECK(g.num_edges() == 3);

  CHECK_THROWS_AS(ArchitectureGraph::from_edge_list("2\n0\n"), ParseError);
  CHECK_THROWS_AS(ArchitectureGraph::from_edge_list("2\n0 5\n"), ParseError);
  CHECK_THROWS_AS(ArchitectureGraph::from_edge_list("2\n1 1\n"), ParseError);
  CHECK_THROWS_AS(ArchitectureGraph::from_edge_list(""), ParseError);
}

TEST_CASE("bundled device fixtures") {
  ArchitectureGraph sycamore =
      ArchitectureGraph::from_edge_list(read_data_file("sycamore_54.txt"));
  CHECK(sycamore.num_qubits() == 54);
  CHECK(sycamore.connected());

  ArchitectureGraph rochester =
      ArchitectureGraph::from_edge_list(read_data_file("rochester_53.txt"));
  CHECK(rochester.num_qubits() == 53);
  CHECK(rochester.connected());

  ArchitectureGraph heron =
      ArchitectureGraph::from_edge_list(read_data_file("heron_156.txt"));
  CHECK(heron.num_qubits() == 156);
  CHECK(heron.connected());
}

TEST_CASE("induced subgraphs") {
  ArchitectureGraph path3 = ArchitectureGraph::path(3);
  auto [sub, map] = induced_subgraph(path3, {0, 1});
  CHECK(sub.num_qubits() == 2);
  CHECK(sub.num_edges() == 1);
  CHECK(map == std::vector<int>{0, 1});

  auto [cycle, map4] = induced_subgraph(ArchitectureGraph::grid(2, 2),
                                        {0, 1, 2, 3});
  CHECK(cycle.num_edges() == 4);  // the 2x2 grid is a 4-cycle
  (void)map4;

  auto [disc, mapd] = induced_subgraph(path3, {0, 2});
  CHECK(disc.num_edges() == 0);  // isolated nodes are allowed
  (void)mapd;

  CHECK_THROWS_AS(induced_subgraph(path3, {0, 0}), InvalidArgument);

  // adjacency preserved through the relabeling
  ArchitectureGraph g = ArchitectureGraph::grid(3, 3);
  std::vector<int> qs{1, 3, 4, 7};
  auto [sub2, m2] = induced_subgraph(g, qs);
  for (int a = 0; a < sub2.num_qubits(); ++a)
    for (int b = a + 1; b < sub2.num_qubits(); ++b)
      CHECK(sub2.has_edge(a, b) == g.has_edge(m2[a], m2[b]));
}

TEST_CASE("canonical keys are isomorphism-invariant") {
  ArchitectureGraph path3 = ArchitectureGraph::path(3);
  ArchitectureGraph path3_relabeled(3, {{2, 1}, {1, 0}});
  CHECK(canonical_key(path3) == canonical_key(path3_relabeled));

  ArchitectureGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(canonical_key(path3) != canonical_key(triangle));

  CHECK_THROWS_AS(canonical_key(ArchitectureGraph::grid(2, 3)),
                  InvalidArgument);

  // exhaustive invariance for a 5-node sample under all 120 relabelings
  ArchitectureGraph sample(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
  std::string key = canonical_key(sample);
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    CHECK(canonical_key(permuted(sample, perm)) == key);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("the 21 connected 5-node graphs get 21 distinct keys") {
  std::set<std::string> keys;
  int connected_count = 0;
  std::vector<std::pair<int, int>> all_pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) all_pairs.emplace_back(a, b);
  std::set<std::string> seen_classes;
  for (uint32_t bits = 0; bits < (1u << 10); ++bits) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < 10; ++e)
      if (bits & (1u << e)) edges.push_back(all_pairs[e]);
    ArchitectureGraph g(5, edges);
    if (!g.connected()) continue;
    ++connected_count;
    keys.insert(canonical_key(g));
  }
  CHECK(keys.size() == 21);
  CHECK(connected_count > 21);  // many labeled graphs per class
}
