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

#include "ssr/verify.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>

#include "ssr/gf2.hpp"
#include "ssr/rng.hpp"

namespace ssr {

namespace {

constexpr double kPi = 3.14159265358979323846;

uint64_t fnv1a(const std::string &s) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// One- and two-qubit applications over a packed amplitude vector, parallel
// over independent index groups; every output element is a function of fixed
// inputs, so results are bitwise identical at any thread count.
template <bool Parallel>
void apply_1q(StateVector &psi, int q, const std::array<Amplitude, 4> &u) {
  const uint64_t mask = uint64_t{1} << q;
  const long long dim = static_cast<long long>(psi.size());
#ifdef _OPENMP
#pragma omp parallel for if (Parallel && dim >= 16384)
#endif
  for (long long i = 0; i < dim; ++i) {
    if (i & mask) continue;
    uint64_t j = i | mask;
    Amplitude a = psi[i], b = psi[j];
    psi[i] = u[0] * a + u[1] * b;
    psi[j] = u[2] * a + u[3] * b;
  }
}

template <bool Parallel>
void apply_cnot_state(StateVector &psi, int control, int target) {
  const uint64_t cmask = uint64_t{1} << control;
  const uint64_t tmask = uint64_t{1} << target;
  const long long dim = static_cast<long long>(psi.size());
#ifdef _OPENMP
#pragma omp parallel for if (Parallel && dim >= 16384)
#endif
  for (long long i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(psi[i], psi[i | tmask]);
  }
}

template <bool Parallel>
void apply_swap_state(StateVector &psi, int a, int b) {
  const uint64_t amask = uint64_t{1} << a;
  const uint64_t bmask = uint64_t{1} << b;
  const long long dim = static_cast<long long>(psi.size());
#ifdef _OPENMP
#pragma omp parallel for if (Parallel && dim >= 16384)
#endif
  for (long long i = 0; i < dim; ++i) {
    if ((i & amask) && !(i & bmask))
      std::swap(psi[i], psi[(i & ~amask) | bmask]);
  }
}

template <bool Parallel>
StateVector simulate_impl(const Circuit &c, uint64_t input_basis_state) {
  if (c.num_qubits() > 12)
    throw InvalidArgument("statevector simulation supports at most 12 qubits");
  size_t dim = size_t{1} << c.num_qubits();
  if (input_basis_state >= dim)
    throw InvalidArgument("basis state out of range");
  StateVector psi(dim, Amplitude{0.0, 0.0});
  psi[input_basis_state] = 1.0;

  const Amplitude i1{0.0, 1.0};
  const double s = 1.0 / std::sqrt(2.0);
  for (const Gate &g : c.gates()) {
    switch (g.kind) {
      case GateKind::H:
        apply_1q<Parallel>(psi, g.q0, {s, s, s, -s});
        break;
      case GateKind::X:
        apply_1q<Parallel>(psi, g.q0, {0.0, 1.0, 1.0, 0.0});
        break;
      case GateKind::T:
        apply_1q<Parallel>(psi, g.q0,
                           {1.0, 0.0, 0.0, std::polar(1.0, kPi / 4)});
        break;
      case GateKind::Tdg:
        apply_1q<Parallel>(psi, g.q0,
                           {1.0, 0.0, 0.0, std::polar(1.0, -kPi / 4)});
        break;
      case GateKind::S:
        apply_1q<Parallel>(psi, g.q0, {1.0, 0.0, 0.0, i1});
        break;
      case GateKind::Sdg:
        apply_1q<Parallel>(psi, g.q0, {1.0, 0.0, 0.0, -i1});
        break;
      case GateKind::Rz: {
        double angle = std::strtod(g.label.c_str(), nullptr);
        apply_1q<Parallel>(psi, g.q0,
                           {std::polar(1.0, -angle / 2), 0.0, 0.0,
                            std::polar(1.0, angle / 2)});
        break;
      }
      case GateKind::U:
        apply_1q<Parallel>(psi, g.q0, opaque_unitary(g.label));
        break;
      case GateKind::CNOT:
        apply_cnot_state<Parallel>(psi, g.q0, g.q1);
        break;
      case GateKind::SWAP:
        apply_swap_state<Parallel>(psi, g.q0, g.q1);
        break;
    }
  }
  return psi;
}

}  // namespace

std::array<Amplitude, 4> opaque_unitary(const std::string &label) {
  Rng rng(fnv1a(label));
  // Two complex Gaussian columns, orthonormalized.
  Amplitude a{rng.normal(), rng.normal()}, b{rng.normal(), rng.normal()};
  double norm = std::sqrt(std::norm(a) + std::norm(b));
  a /= norm;
  b /= norm;
  // Second column orthogonal to (a, b): (-conj(b), conj(a)).
  return {a, -std::conj(b), b, std::conj(a)};
}

StateVector simulate(const Circuit &c, uint64_t input_basis_state) {
  return simulate_impl<true>(c, input_basis_state);
}

StateVector simulate_serial(const Circuit &c, uint64_t input_basis_state) {
  return simulate_impl<false>(c, input_basis_state);
}

namespace {

template <bool Parallel>
bool equivalent_impl(const Circuit &a, const Circuit &b, double tol) {
  if (a.num_qubits() != b.num_qubits())
    throw InvalidArgument("equivalence needs equal qubit counts");
  if (a.num_qubits() > 10)
    throw InvalidArgument("equivalence checking supports at most 10 qubits");
  const uint64_t dim = uint64_t{1} << a.num_qubits();

  // Global phase fixed once, on the first nonzero amplitude of basis 0.
  StateVector va0 = simulate_serial(a, 0), vb0 = simulate_serial(b, 0);
  Amplitude phase{1.0, 0.0};
  for (size_t i = 0; i < va0.size(); ++i) {
    if (std::abs(va0[i]) > tol) {
      if (std::abs(vb0[i]) < tol) return false;
      phase = vb0[i] / va0[i];
      phase /= std::abs(phase);
      break;
    }
  }

  std::atomic<bool> equal{true};
#ifdef _OPENMP
#pragma omp parallel for if (Parallel && dim > 4) schedule(dynamic)
#endif
  for (long long basis = 0; basis < static_cast<long long>(dim); ++basis) {
    if (!equal.load(std::memory_order_relaxed)) continue;
    StateVector va = simulate_serial(a, basis);
    StateVector vb = simulate_serial(b, basis);
    for (size_t i = 0; i < va.size(); ++i) {
      if (std::abs(phase * va[i] - vb[i]) > tol) {
        equal.store(false, std::memory_order_relaxed);
        break;
      }
    }
  }
  return equal.load();
}

}  // namespace

bool equivalent(const Circuit &a, const Circuit &b, double tol) {
  return equivalent_impl<true>(a, b, tol);
}

bool equivalent_serial(const Circuit &a, const Circuit &b, double tol) {
  return equivalent_impl<false>(a, b, tol);
}

bool linear_equivalent(const Circuit &a, const Circuit &b, int n) {
  return from_circuit(a, n) == from_circuit(b, n);
}

}  // namespace ssr
