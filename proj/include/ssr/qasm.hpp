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

#include "ssr/circuit.hpp"

namespace ssr {

/// Parses an OpenQASM 2.0 program restricted to one qreg and the gate set
/// {h, x, t, tdg, s, sdg, rz, cx, swap, barrier} plus named single-qubit
/// opaque gates (mapped to U with the name as label). Barriers are dropped.
/// Unsupported statements are hard errors with line/column information.
Circuit parse_qasm(const std::string &text);

/// Emits OpenQASM 2.0 such that parse_qasm(emit_qasm(c)) == c.
std::string emit_qasm(const Circuit &c);

}  // namespace ssr
