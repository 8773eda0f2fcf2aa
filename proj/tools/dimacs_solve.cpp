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

// Standalone DIMACS front-end for the built-in CDCL solver. Output follows
// the usual competition format (s/v lines, exit code 10/20), so this binary
// also serves as a stand-in for any external solver executable.

#include <fstream>
#include <iostream>
#include <sstream>

#include "ssr/sat.hpp"

int main(int argc, char **argv) {
  std::string text;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open '" << argv[1] << "'\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  }

  try {
    ssr::CnfFormula formula = ssr::parse_dimacs(text);
    ssr::CdclSolver solver;
    ssr::SatResult result = solver.solve(formula);
    if (!result.sat) {
      std::cout << "s UNSATISFIABLE\n";
      return 20;
    }
    std::cout << "s SATISFIABLE\n";
    std::cout << "v";
    for (int v = 1; v <= formula.var_count; ++v)
      std::cout << " " << (result.model[v] ? v : -v);
    std::cout << " 0\n";
    return 10;
  } catch (const ssr::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
