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

#include "ssr/qasm.hpp"
#include "testutil.hpp"

using namespace ssr;

TEST_CASE("GHZ parses in file order") {
  Circuit c = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n"
      "h q[0];\ncx q[0],q[1];\ncx q[0],q[2];\n");
  REQUIRE(c.size() == 3);
  CHECK(c.gate(0).kind == GateKind::H);
  CHECK(c.gate(1).kind == GateKind::CNOT);
  CHECK(c.gate(1).q0 == 0);
  CHECK(c.gate(1).q1 == 1);
  CHECK(c.gate(2).q1 == 2);
}

TEST_CASE("empty body") {
  Circuit c = parse_qasm("qreg q[5];");
  CHECK(c.num_qubits() == 5);
  CHECK(c.empty());
  std::string emitted = emit_qasm(c);
  CHECK(emitted ==
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[5];\n");
}

TEST_CASE("single cx statement") {
  Circuit c(2);
  c.add_cnot(0, 1);
  std::string text = emit_qasm(c);
  CHECK(text.find("cx q[0],q[1];") != std::string::npos);
  CHECK(text.find("cx", text.find("cx") + 1) == std::string::npos);
}

TEST_CASE("barriers are dropped, comments skipped") {
  Circuit c = parse_qasm(
      "qreg q[3];\n// a comment\nbarrier q;\nh q[1]; barrier q[0],q[1];\n");
  REQUIRE(c.size() == 1);
  CHECK(c.gate(0).kind == GateKind::H);
}

TEST_CASE("rz keeps its angle text verbatim") {
  std::string text = "OPENQASM 2.0;\nqreg q[2];\nrz(0.1000000000000000055511) q[1];\n";
  Circuit c = parse_qasm(text);
  CHECK(c.gate(0).label == "0.1000000000000000055511");
  CHECK(emit_qasm(c).find("rz(0.1000000000000000055511) q[1];") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_qasm("qreg q[1];\nrz(pi/2) q[0];\n"), ParseError);
}

TEST_CASE("opaque single-qubit gates become labeled U gates") {
  Circuit c = parse_qasm("qreg q[2];\nmygate q[0];\nmygate q[1];\n");
  REQUIRE(c.size() == 2);
  CHECK(c.gate(0).kind == GateKind::U);
  CHECK(c.gate(0).label == "mygate");
  CHECK(emit_qasm(c).find("mygate q[0];") != std::string::npos);
}

TEST_CASE("unsupported constructs are hard errors") {
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nccx q[0],q[1],q[0];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\ncreg c[2];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nmeasure q[0];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nu3(1,2,3) q[0];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nqreg r[2];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("h q[0];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nh q[7];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nh r[0];\n"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\ncx q[0],q[0];\n"), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_qasm("qreg q[2];\nh q[9];\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("round-trip is the identity on a 50-gate random program") {
  Rng rng(12345);
  Circuit c(6);
  const char *labels[] = {"mygate", "phi", "g1"};
  for (int i = 0; i < 50; ++i) {
    switch (rng.uniform_int(0, 9)) {
      case 0:
        c.add(GateKind::H, rng.uniform_int(0, 5));
        break;
      case 1:
        c.add(GateKind::X, rng.uniform_int(0, 5));
        break;
      case 2:
        c.add(GateKind::T, rng.uniform_int(0, 5));
        break;
      case 3:
        c.add(GateKind::Tdg, rng.uniform_int(0, 5));
        break;
      case 4:
        c.add(GateKind::S, rng.uniform_int(0, 5));
        break;
      case 5:
        c.add(GateKind::Rz, rng.uniform_int(0, 5), -1,
              std::to_string(rng.uniform01()));
        break;
      case 6:
        c.add(GateKind::U, rng.uniform_int(0, 5), -1,
              labels[rng.uniform_index(3)]);
        break;
      default: {
        int a = rng.uniform_int(0, 5);
        int b = rng.uniform_int(0, 4);
        if (b >= a) ++b;
        c.add(rng.coin(0.5) ? GateKind::CNOT : GateKind::SWAP, a, b);
      }
    }
  }
  Circuit back = parse_qasm(emit_qasm(c));
  CHECK(back == c);
  CHECK(emit_qasm(back) == emit_qasm(c));
}
