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

#include <memory>
#include <string>
#include <vector>

#include "ssr/error.hpp"

namespace ssr {

/// CNF in DIMACS conventions: variables 1..var_count, literals signed ints.
struct CnfFormula {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;

  void add_clause(std::vector<int> lits) { clauses.push_back(std::move(lits)); }
};

struct SatResult {
  bool sat = false;
  /// model[v] is the value of variable v, indices 1..var_count (0 unused).
  std::vector<bool> model;
};

/// Bit-exact DIMACS emission: "p cnf <vars> <clauses>" header, clauses as
/// space-separated literals terminated by 0.
std::string to_dimacs(const CnfFormula &formula);
CnfFormula parse_dimacs(const std::string &text);

/// Satisfiability backend contract: DIMACS-level CNF in, SAT + model or
/// UNSAT out. Backend failures (not UNSAT) raise Error.
class SatBackend {
 public:
  virtual ~SatBackend() = default;
  virtual SatResult solve(const CnfFormula &formula) = 0;
};

/// In-process CDCL solver: two-watched literals, first-UIP learning,
/// activity-based branching with saved phases, Luby restarts. Deterministic
/// for identical input.
class CdclSolver : public SatBackend {
 public:
  SatResult solve(const CnfFormula &formula) override;
};

/// Runs any DIMACS-conformant solver executable: writes the instance to a
/// temporary file, invokes `<exe> <file>` and parses the "s ..."/"v ..."
/// answer lines.
class SubprocessSolver : public SatBackend {
 public:
  explicit SubprocessSolver(std::string exe_path)
      : exe_path_(std::move(exe_path)) {}
  SatResult solve(const CnfFormula &formula) override;

 private:
  std::string exe_path_;
};

}  // namespace ssr
