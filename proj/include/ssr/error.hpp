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

#include <sstream>
#include <stdexcept>
#include <string>

namespace ssr {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed input text (QASM, edge lists, matrix or model files).
class ParseError : public Error {
 public:
  ParseError(const std::string &msg, int line, int col)
      : Error("parse error at line " + std::to_string(line) + ", col " +
              std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  explicit ParseError(const std::string &msg) : Error(msg), line(0), col(0) {}
  int line;
  int col;
};

/// A precondition on an operation's arguments does not hold.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string &msg) : Error(msg) {}
};

/// An internal invariant failed. Indicates a bug, not bad user input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string &msg) : Error(msg) {}
};

#define SSR_ASSERT(cond, msg)                                        \
  do {                                                               \
    if (!(cond)) {                                                   \
      std::ostringstream oss_;                                       \
      oss_ << "internal invariant violated: " << msg << " (" << #cond \
           << " at " << __FILE__ << ":" << __LINE__ << ")";          \
      throw ::ssr::InternalError(oss_.str());                        \
    }                                                                \
  } while (0)

}  // namespace ssr
