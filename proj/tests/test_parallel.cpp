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

// The OpenMP kernels against their serial references.

#include <doctest.h>

#include "ssr/synth.hpp"
#include "ssr/verify.hpp"
#include "testutil.hpp"

using namespace ssr;

TEST_CASE("distance tables: parallel equals serial") {
  for (int n = 2; n <= 4; ++n) {
    ArchitectureGraph ag = ArchitectureGraph::path(n);
    CHECK(bfs_distance_table(ag) == bfs_distance_table_serial(ag));
  }
  ArchitectureGraph square = ArchitectureGraph::grid(2, 2);
  CHECK(bfs_distance_table(square) == bfs_distance_table_serial(square));
}

TEST_CASE("bfs oracle: parallel equals serial, with and without blocks") {
  ArchitectureGraph path4 = ArchitectureGraph::path(4);
  Rng rng(201);
  for (int trial = 0; trial < 40; ++trial) {
    GF2Matrix m = test::random_invertible(path4, rng.uniform_int(0, 12), rng);
    CHECK(bfs_oracle(m, path4, 14) == bfs_oracle_serial(m, path4, 14));
    std::vector<BlockedPosition> blocked;
    for (int i = rng.uniform_int(0, 3); i > 0; --i)
      blocked.push_back({rng.uniform_int(0, 5), rng.uniform_int(0, 3)});
    CHECK(bfs_oracle(m, path4, 14, &blocked) ==
          bfs_oracle_serial(m, path4, 14, &blocked));
  }
}

TEST_CASE("bidirectional search agrees with the table on a 5-qubit path") {
  ArchitectureGraph path5 = ArchitectureGraph::path(5);
  std::vector<uint8_t> table = bfs_distance_table(path5);
  Rng rng(203);
  for (int trial = 0; trial < 30; ++trial) {
    GF2Matrix m = test::random_invertible(path5, rng.uniform_int(0, 16), rng);
    CHECK(bidirectional_depth(m, path5) == table[m.pack()]);
  }
}

TEST_CASE("statevector kernels: parallel equals serial bitwise") {
  Rng rng(205);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = test::random_circuit(11, 60, rng);
    c.add(GateKind::Rz, 3, -1, "1.25");
    c.add(GateKind::U, 7, -1, "probe");
    uint64_t basis = rng.next() & ((uint64_t{1} << 11) - 1);
    StateVector a = simulate(c, basis);
    StateVector b = simulate_serial(c, basis);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("equivalence checking: parallel equals serial") {
  ArchitectureGraph ag = ArchitectureGraph::grid(2, 3);
  Rng rng(207);
  for (int trial = 0; trial < 15; ++trial) {
    Circuit a = test::random_compliant_circuit(ag, 15, rng);
    Circuit b = rng.coin(0.5) ? a : test::random_compliant_circuit(ag, 15, rng);
    CHECK(equivalent(a, b, 1e-9) == equivalent_serial(a, b, 1e-9));
  }
}
