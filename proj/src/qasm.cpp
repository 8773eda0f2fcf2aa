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

#include "ssr/qasm.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace ssr {
namespace {

struct Token {
  enum Kind { Ident, Number, String, Punct, End } kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string &text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        t.text.push_back(advance());
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
        c == '+') {
      t.kind = Token::Number;
      if (c == '-' || c == '+') t.text.push_back(advance());
      bool seen_digit = false;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          seen_digit = true;
          t.text.push_back(advance());
        } else if (d == '.') {
          t.text.push_back(advance());
        } else if ((d == 'e' || d == 'E') && seen_digit) {
          t.text.push_back(advance());
          if (pos_ < text_.size() &&
              (text_[pos_] == '+' || text_[pos_] == '-'))
            t.text.push_back(advance());
        } else {
          break;
        }
      }
      if (!seen_digit) throw ParseError("malformed number", t.line, t.col);
      return t;
    }
    if (c == '"') {
      t.kind = Token::String;
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"')
        t.text.push_back(advance());
      if (pos_ >= text_.size())
        throw ParseError("unterminated string", t.line, t.col);
      advance();
      return t;
    }
    t.kind = Token::Punct;
    t.text.push_back(advance());
    return t;
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string &text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string &text) : lexer_(text) { bump(); }

  Circuit parse() {
    // Version header is optional but must be well-formed when present.
    if (cur_.kind == Token::Ident && cur_.text == "OPENQASM") {
      bump();
      expect_number();
      expect_punct(";");
    }
    while (cur_.kind != Token::End) statement();
    if (!qreg_seen_) throw ParseError("no qreg declared", cur_.line, cur_.col);
    return std::move(circuit_);
  }

 private:
  void bump() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string &msg) {
    throw ParseError(msg, cur_.line, cur_.col);
  }

  void expect_punct(const std::string &p) {
    if (cur_.kind != Token::Punct || cur_.text != p)
      fail("expected '" + p + "'");
    bump();
  }

  std::string expect_ident() {
    if (cur_.kind != Token::Ident) fail("expected identifier");
    std::string s = cur_.text;
    bump();
    return s;
  }

  std::string expect_number() {
    if (cur_.kind != Token::Number) fail("expected number");
    std::string s = cur_.text;
    bump();
    return s;
  }

  int qubit_operand() {
    Token at = cur_;
    std::string reg = expect_ident();
    if (reg != qreg_name_) fail("unknown register '" + reg + "'");
    expect_punct("[");
    int idx = std::stoi(expect_number());
    expect_punct("]");
    if (idx < 0 || idx >= circuit_.num_qubits())
      throw ParseError("qubit index out of range", at.line, at.col);
    return idx;
  }

  void statement() {
    Token head = cur_;
    std::string name = expect_ident();
    if (name == "include") {
      if (cur_.kind != Token::String) fail("expected include path");
      bump();
      expect_punct(";");
      return;
    }
    if (name == "qreg") {
      if (qreg_seen_)
        throw ParseError("only one qreg is supported", head.line, head.col);
      qreg_name_ = expect_ident();
      expect_punct("[");
      int n = std::stoi(expect_number());
      expect_punct("]");
      expect_punct(";");
      circuit_ = Circuit(n);
      qreg_seen_ = true;
      return;
    }
    if (name == "creg" || name == "measure" || name == "reset" ||
        name == "if" || name == "gate" || name == "opaque") {
      throw ParseError("unsupported statement '" + name + "'", head.line,
                       head.col);
    }
    if (!qreg_seen_)
      throw ParseError("gate before qreg declaration", head.line, head.col);
    if (name == "barrier") {
      // Barriers carry no semantics here; consume operands and drop.
      while (cur_.kind != Token::Punct || cur_.text != ";") {
        if (cur_.kind == Token::End) fail("unterminated barrier");
        bump();
      }
      bump();
      return;
    }

    static const std::map<std::string, GateKind> one_qubit = {
        {"h", GateKind::H},   {"x", GateKind::X},     {"t", GateKind::T},
        {"tdg", GateKind::Tdg}, {"s", GateKind::S},   {"sdg", GateKind::Sdg}};

    std::string param;
    if (name == "rz") {
      expect_punct("(");
      if (cur_.kind != Token::Number)
        fail("rz expects a plain decimal angle");
      param = cur_.text;
      bump();
      expect_punct(")");
      int q = qubit_operand();
      expect_punct(";");
      circuit_.add(GateKind::Rz, q, -1, param);
      return;
    }
    if (cur_.kind == Token::Punct && cur_.text == "(")
      throw ParseError("parameterised gate '" + name + "' is unsupported",
                       head.line, head.col);

    std::vector<int> operands;
    operands.push_back(qubit_operand());
    while (cur_.kind == Token::Punct && cur_.text == ",") {
      bump();
      operands.push_back(qubit_operand());
    }
    expect_punct(";");

    if (name == "cx" || name == "swap") {
      if (operands.size() != 2)
        throw ParseError(name + " expects two operands", head.line, head.col);
      if (operands[0] == operands[1])
        throw ParseError("two-qubit gate with equal operands", head.line,
                         head.col);
      circuit_.add(name == "cx" ? GateKind::CNOT : GateKind::SWAP,
                   operands[0], operands[1]);
      return;
    }
    if (operands.size() != 1)
      throw ParseError("unsupported multi-qubit gate '" + name + "'",
                       head.line, head.col);
    auto it = one_qubit.find(name);
    if (it != one_qubit.end()) {
      circuit_.add(it->second, operands[0]);
    } else {
      // Named single-qubit opaque gate.
      circuit_.add(GateKind::U, operands[0], -1, name);
    }
  }

  Lexer lexer_;
  Token cur_;
  Circuit circuit_{0};
  std::string qreg_name_;
  bool qreg_seen_ = false;
};

}  // namespace

Circuit parse_qasm(const std::string &text) { return Parser(text).parse(); }

std::string emit_qasm(const Circuit &c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate &g : c.gates()) {
    switch (g.kind) {
      case GateKind::Rz:
        out << "rz(" << g.label << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::U:
        out << g.label << " q[" << g.q0 << "];\n";
        break;
      case GateKind::CNOT:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::SWAP:
        out << "swap q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      default:
        out << gate_kind_name(g.kind) << " q[" << g.q0 << "];\n";
        break;
    }
  }
  return out.str();
}

}  // namespace ssr
