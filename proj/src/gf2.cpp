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

#include "ssr/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace ssr {

GF2Matrix GF2Matrix::identity(int n) {
  if (n < 1) throw InvalidArgument("matrix dimension must be positive");
  GF2Matrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::zero(int n) {
  if (n < 1) throw InvalidArgument("matrix dimension must be positive");
  return GF2Matrix(n);
}

void GF2Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int w = 0; w < words_; ++w)
    std::swap(bits_[static_cast<size_t>(a) * words_ + w],
              bits_[static_cast<size_t>(b) * words_ + w]);
}

bool GF2Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j) != (i == j)) return false;
  return true;
}

uint32_t GF2Matrix::pack() const {
  if (n_ > 5) throw InvalidArgument("pack supports dimensions up to 5");
  uint32_t bits = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) bits |= uint32_t{1} << (i * n_ + j);
  return bits;
}

GF2Matrix GF2Matrix::unpack(uint32_t bits, int n) {
  if (n < 1 || n > 5) throw InvalidArgument("unpack supports dimensions 1..5");
  GF2Matrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.set(i, j, (bits >> (i * n + j)) & 1);
  return m;
}

std::string GF2Matrix::to_text() const {
  std::string out;
  out.reserve(static_cast<size_t>(n_) * (n_ + 1));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.push_back(get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

GF2Matrix GF2Matrix::from_text(const std::string &text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw ParseError("empty matrix text");
  int n = static_cast<int>(rows.size());
  GF2Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("matrix row " + std::to_string(i) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " +
                       std::to_string(n));
    for (int j = 0; j < n; ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1')
        throw ParseError("matrix entries must be 0 or 1");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

GF2Matrix apply_cnot(const GF2Matrix &m, int control, int target) {
  if (control == target || control < 0 || target < 0 || control >= m.dim() ||
      target >= m.dim())
    throw InvalidArgument("bad CNOT operands for row operation");
  GF2Matrix out = m;
  out.xor_rows(control, target);
  return out;
}

GF2Matrix from_circuit(const Circuit &c, int n) {
  GF2Matrix m = GF2Matrix::identity(n);
  for (const Gate &g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        m.xor_rows(g.q0, g.q1);
        break;
      case GateKind::SWAP:
        m.swap_rows(g.q0, g.q1);
        break;
      default:
        throw InvalidArgument("non-linear gate in CNOT/SWAP circuit");
    }
  }
  return m;
}

bool is_invertible(const GF2Matrix &m) {
  GF2Matrix a = m;
  int n = a.dim();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.get(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    a.swap_rows(col, pivot);
    for (int r = 0; r < n; ++r)
      if (r != col && a.get(r, col)) a.xor_rows(col, r);
  }
  return true;
}

GF2Matrix multiply(const GF2Matrix &a, const GF2Matrix &b) {
  if (a.dim() != b.dim()) throw InvalidArgument("dimension mismatch");
  int n = a.dim();
  GF2Matrix out = GF2Matrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a.get(i, k)) out.xor_rows_from(b, k, i);
  return out;
}

GF2Matrix inverse(const GF2Matrix &m) {
  int n = m.dim();
  GF2Matrix a = m;
  GF2Matrix inv = GF2Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.get(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw InvalidArgument("matrix is singular");
    a.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    for (int r = 0; r < n; ++r)
      if (r != col && a.get(r, col)) {
        a.xor_rows(col, r);
        inv.xor_rows(col, r);
      }
  }
  return inv;
}

}  // namespace ssr
