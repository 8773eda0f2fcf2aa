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

#include <array>
#include <complex>
#include <vector>

#include "ssr/circuit.hpp"

namespace ssr {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

/// Applies each gate's unitary in order to |basis_state>. Opaque U(label)
/// gates use a pseudo-random unitary derived from hashing the label, fixed
/// across runs, so label-equal gates denote the same operator. n <= 12.
StateVector simulate(const Circuit &c, uint64_t input_basis_state);
StateVector simulate_serial(const Circuit &c, uint64_t input_basis_state);

/// True iff the circuits agree on all basis inputs up to one global phase
/// within tol (phase fixed on the first nonzero amplitude). n <= 10.
bool equivalent(const Circuit &a, const Circuit &b, double tol);
bool equivalent_serial(const Circuit &a, const Circuit &b, double tol);

/// GF(2) matrix equality of two CNOT/SWAP circuits.
bool linear_equivalent(const Circuit &a, const Circuit &b, int n);

/// The 2x2 unitary assigned to an opaque gate label.
std::array<Amplitude, 4> opaque_unitary(const std::string &label);

}  // namespace ssr
