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

#include <cstdint>
#include <string>
#include <vector>

#include "ssr/circuit.hpp"
#include "ssr/error.hpp"

namespace ssr {

/// Square Boolean matrix over GF(2). Rows are stored as machine-word
/// bitvectors; XOR of rows is the hot operation.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  static GF2Matrix identity(int n);
  static GF2Matrix zero(int n);

  int dim() const { return n_; }

  bool get(int r, int c) const {
    return (bits_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
  }
  void set(int r, int c, bool v) {
    uint64_t &w = bits_[static_cast<size_t>(r) * words_ + c / 64];
    if (v)
      w |= uint64_t{1} << (c % 64);
    else
      w &= ~(uint64_t{1} << (c % 64));
  }

  /// row[dst] ^= row[src]
  void xor_rows(int src, int dst) {
    uint64_t *d = &bits_[static_cast<size_t>(dst) * words_];
    const uint64_t *s = &bits_[static_cast<size_t>(src) * words_];
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
  }

  /// row[dst] ^= other.row[src]
  void xor_rows_from(const GF2Matrix &other, int src, int dst) {
    uint64_t *d = &bits_[static_cast<size_t>(dst) * words_];
    const uint64_t *s = &other.bits_[static_cast<size_t>(src) * words_];
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
  }

  void swap_rows(int a, int b);

  bool is_identity() const;
  bool operator==(const GF2Matrix &other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }
  bool operator!=(const GF2Matrix &other) const { return !(*this == other); }

  /// Row-major packing of an n<=5 matrix into the low n*n bits.
  uint32_t pack() const;
  static GF2Matrix unpack(uint32_t bits, int n);

  /// n lines of n characters in {0,1}.
  std::string to_text() const;
  static GF2Matrix from_text(const std::string &text);

 private:
  GF2Matrix(int n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_) {}
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

GF2Matrix apply_cnot(const GF2Matrix &m, int control, int target);

/// Functional semantics of a CNOT/SWAP circuit: left-to-right fold of row
/// additions starting from the identity, with SWAP as its 3-CNOT
/// decomposition (equivalently a row exchange).
GF2Matrix from_circuit(const Circuit &c, int n);

bool is_invertible(const GF2Matrix &m);
GF2Matrix multiply(const GF2Matrix &a, const GF2Matrix &b);
GF2Matrix inverse(const GF2Matrix &m);

}  // namespace ssr
