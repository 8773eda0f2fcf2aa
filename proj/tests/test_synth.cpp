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

#include "ssr/synth.hpp"
#include "ssr/verify.hpp"
#include "testutil.hpp"

using namespace ssr;

namespace {

const ArchitectureGraph kPath3 = ArchitectureGraph::path(3);
const ArchitectureGraph kTriangle{3, {{0, 1}, {1, 2}, {0, 2}}};

bool gate_hits_block(const SynthesisResult &r,
                     const std::vector<BlockedPosition> &blocked) {
  for (size_t i = 0; i < r.circuit.size(); ++i) {
    const Gate &g = r.circuit.gate(i);
    for (const auto &bp : blocked)
      if (bp.d == r.gate_layer[i] && (g.q0 == bp.q || g.q1 == bp.q))
        return true;
  }
  return false;
}

}  // namespace

TEST_CASE("boundary-only instances") {
  GF2Matrix id3 = GF2Matrix::identity(3);
  CdclSolver solver;
  CHECK(solver.solve(encode(id3, kPath3, 0).formula).sat);
  CHECK_FALSE(solver.solve(encode(test::fig5d_matrix(), kPath3, 0).formula).sat);
}

TEST_CASE("the worked 3x3 instance is SAT at depth 2 and UNSAT at 1") {
  CdclSolver solver;
  CnfInstance d2 = encode(test::fig5d_matrix(), kPath3, 2);
  SatResult r = solver.solve(d2.formula);
  REQUIRE(r.sat);
  Circuit decoded = decode(d2, r.model);
  // the model is unique here: CNOT(0,1) then CNOT(1,2)
  REQUIRE(decoded.size() == 2);
  CHECK(decoded.gate(0).q0 == 0);
  CHECK(decoded.gate(0).q1 == 1);
  CHECK(decoded.gate(1).q0 == 1);
  CHECK(decoded.gate(1).q1 == 2);
  CHECK(r.model[d2.gate_var(0, 0, 1)]);
  CHECK(r.model[d2.gate_var(1, 1, 2)]);
  CHECK(d2.gate_var(0, 0, 2) == 0);  // non-edge has no variable

  CHECK_FALSE(solver.solve(encode(test::fig5d_matrix(), kPath3, 1).formula).sat);
}

TEST_CASE("decoded circuits realize their targets") {
  CdclSolver solver;
  Rng rng(41);
  ArchitectureGraph path4 = ArchitectureGraph::path(4);
  int solved = 0;
  for (int trial = 0; trial < 100; ++trial) {
    GF2Matrix target = test::random_invertible(path4, rng.uniform_int(1, 10), rng);
    for (int d = 1; d <= 8; ++d) {
      CnfInstance inst = encode(target, path4, d);
      SatResult r = solver.solve(inst.formula);
      if (!r.sat) continue;
      Circuit c = decode(inst, r.model);
      CHECK(from_circuit(c, 4) == target);
      ++solved;
      break;
    }
  }
  CHECK(solved == 100);
}

TEST_CASE("synthesize: identity and the Fig. 5(d) running example") {
  CdclSolver solver;
  auto id = synthesize(GF2Matrix::identity(3), kPath3, {}, 0, solver);
  REQUIRE(id.has_value());
  CHECK(id->circuit.empty());
  CHECK(id->achieved_depth == 0);
  CHECK(id->sat_calls == 1);

  auto exact = synthesize(test::fig5d_matrix(), kPath3, {}, 2, solver);
  REQUIRE(exact.has_value());
  CHECK(exact->achieved_depth == 2);
  CHECK(exact->sat_calls == 2);  // SAT at 2, UNSAT at 1, 0 excluded

  auto overshoot = synthesize(test::fig5d_matrix(), kPath3, {}, 5, solver);
  REQUIRE(overshoot.has_value());
  CHECK(overshoot->achieved_depth == 2);
  CHECK(overshoot->sat_calls == 5);
}

TEST_CASE("achieved depth is independent of the prediction") {
  CdclSolver solver;
  Rng rng(43);
  ArchitectureGraph path4 = ArchitectureGraph::path(4);
  for (int trial = 0; trial < 12; ++trial) {
    GF2Matrix target = test::random_invertible(path4, rng.uniform_int(1, 12), rng);
    int reference = -1;
    for (int d_pred = 0; d_pred <= 6; ++d_pred) {
      auto r = synthesize(target, path4, {}, d_pred, solver);
      REQUIRE(r.has_value());
      CHECK(from_circuit(r->circuit, 4) == target);
      if (reference < 0) reference = r->achieved_depth;
      CHECK(r->achieved_depth == reference);
    }
    CHECK(reference == bfs_oracle(target, path4, 16).value());
  }
}

TEST_CASE("bfs oracle basics") {
  CHECK(bfs_oracle(GF2Matrix::identity(3), kPath3, 10).value() == 0);
  GF2Matrix one = apply_cnot(GF2Matrix::identity(3), 0, 1);
  CHECK(bfs_oracle(one, kPath3, 10).value() == 1);
  CHECK(bfs_oracle(test::fig5d_matrix(), kPath3, 10).value() == 2);
  CHECK_FALSE(bfs_oracle(test::fig5d_matrix(), kPath3, 1).has_value());
  CHECK(bidirectional_depth(test::fig5d_matrix(), kPath3) == 2);
}

TEST_CASE("optimality against the oracle on all of GL(3,2)") {
  CdclSolver solver;
  for (const ArchitectureGraph &ag : {kPath3, kTriangle}) {
    std::vector<uint8_t> table = bfs_distance_table(ag);
    for (const GF2Matrix &m : test::all_gl3()) {
      int exact = table[m.pack()];
      REQUIRE(exact != 0xff);
      auto r = synthesize(m, ag, {}, exact, solver);
      REQUIRE(r.has_value());
      CHECK(r->achieved_depth == exact);
      CHECK(from_circuit(r->circuit, 3) == m);
    }
  }
}

TEST_CASE("optimality on 4 qubits: path and cycle") {
  CdclSolver solver;
  ArchitectureGraph path4 = ArchitectureGraph::path(4);
  ArchitectureGraph cycle4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Rng rng(45);
  for (const ArchitectureGraph &ag : {path4, cycle4}) {
    std::vector<uint8_t> table = bfs_distance_table(ag);
    for (int trial = 0; trial < 120; ++trial) {
      GF2Matrix m = test::random_invertible(ag, rng.uniform_int(1, 14), rng);
      int exact = table[m.pack()];
      auto r = synthesize(m, ag, {}, exact, solver);
      REQUIRE(r.has_value());
      CHECK(r->achieved_depth == exact);
      CHECK(from_circuit(r->circuit, 4) == m);
    }
  }
}

TEST_CASE("layer moves allow parallel gates") {
  // On 2x2 grid, two disjoint edges can fire in one layer.
  ArchitectureGraph square = ArchitectureGraph::grid(2, 2);
  GF2Matrix two = GF2Matrix::identity(4);
  two.xor_rows(0, 1);
  two.xor_rows(2, 3);
  CHECK(bfs_oracle(two, square, 5).value() == 1);
  CdclSolver solver;
  auto r = synthesize(two, square, {}, 1, solver);
  REQUIRE(r.has_value());
  CHECK(r->achieved_depth == 1);
  CHECK(r->circuit.size() == 2);
}

TEST_CASE("blocked positions: empty for an untouched window") {
  Circuit c(3);
  c.add_cnot(0, 1).add_cnot(1, 0);
  SubcircuitWindow w;
  w.gate_ids = {0, 1};
  w.qubits = {0, 1};
  w.span_start = 0;
  w.span_end = 2;
  CHECK(blocked_positions(c, w, 2).empty());
}

TEST_CASE("blocked positions of the gate-position-constraining example") {
  // Fig. 11(a): H, CNOT/SWAP window, then tail gates; depth 9.
  Circuit c(3);
  c.add(GateKind::H, 2);     // 0
  c.add_cnot(0, 1);          // 1 window
  c.add_swap(1, 2);          // 2 window
  c.add_cnot(1, 0);          // 3 window
  c.add(GateKind::H, 0);     // 4
  c.add_cnot(2, 1);          // 5 window
  c.add(GateKind::T, 0);     // 6
  c.add(GateKind::H, 1);     // 7
  c.add_cnot(1, 0);          // 8
  c.add_cnot(2, 1);          // 9
  REQUIRE(depth(c) == 9);

  SubcircuitWindow w;
  w.gate_ids = {1, 2, 3, 5};
  w.qubits = {0, 1, 2};
  w.span_start = 0;
  w.span_end = 6;
  auto blocked = blocked_positions(c, w, 6);

  auto has = [&](int d, int q) {
    for (const auto &bp : blocked)
      if (bp.d == d && bp.q == q) return true;
    return false;
  };
  CHECK(has(0, 2));  // leading H on q2
  CHECK(has(4, 0));  // trailing H on q0, scheduled late
  CHECK(has(5, 0));  // trailing T on q0
  CHECK_FALSE(has(0, 0));
  CHECK_FALSE(has(0, 1));
  for (const auto &bp : blocked) {
    CHECK(bp.d >= 0);
    CHECK(bp.d < 6);
    CHECK(bp.q >= 0);
    CHECK(bp.q < 3);
  }
}

TEST_CASE("synthesized gates avoid blocked positions") {
  CdclSolver solver;
  Rng rng(47);
  ArchitectureGraph path4 = ArchitectureGraph::path(4);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    GF2Matrix target = test::random_invertible(path4, rng.uniform_int(2, 10), rng);
    std::vector<BlockedPosition> blocked;
    for (int i = rng.uniform_int(1, 4); i > 0; --i)
      blocked.push_back({rng.uniform_int(0, 5), rng.uniform_int(0, 3)});
    auto r = synthesize(target, path4, blocked, 1, solver, 12);
    if (!r) continue;
    CHECK_FALSE(gate_hits_block(*r, blocked));
    CHECK(from_circuit(r->circuit, 4) == target);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("blocked synthesis agrees with the blocked oracle") {
  CdclSolver solver;
  Rng rng(49);
  OraclePredictor oracle;
  ArchitectureGraph path4 = ArchitectureGraph::path(4);
  for (int trial = 0; trial < 25; ++trial) {
    GF2Matrix target = test::random_invertible(path4, rng.uniform_int(1, 8), rng);
    std::vector<BlockedPosition> blocked;
    for (int i = rng.uniform_int(0, 3); i > 0; --i)
      blocked.push_back({rng.uniform_int(0, 4), rng.uniform_int(0, 3)});
    int d_pred = oracle.predict(target, path4);
    auto r = synthesize(target, path4, blocked, d_pred, solver, 16);
    auto o = bfs_oracle(target, path4, 16, &blocked);
    CHECK(r.has_value() == o.has_value());
    if (r && o) CHECK(r->achieved_depth == *o);
  }
}

TEST_CASE("adding blocks never decreases achieved depth") {
  CdclSolver solver;
  OraclePredictor oracle;
  Rng rng(51);
  ArchitectureGraph path4 = ArchitectureGraph::path(4);
  for (int trial = 0; trial < 40; ++trial) {
    GF2Matrix target = test::random_invertible(path4, rng.uniform_int(1, 10), rng);
    int d_pred = oracle.predict(target, path4);
    auto unblocked = synthesize(target, path4, {}, d_pred, solver);
    REQUIRE(unblocked.has_value());
    std::vector<BlockedPosition> blocked;
    for (int i = rng.uniform_int(1, 3); i > 0; --i)
      blocked.push_back({rng.uniform_int(0, 4), rng.uniform_int(0, 3)});
    auto constrained = synthesize(target, path4, blocked, d_pred, solver, 16);
    if (constrained)
      CHECK(constrained->achieved_depth >= unblocked->achieved_depth);
  }
}
