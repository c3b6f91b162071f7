// Copyright 2026 The qfalu developers
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfalu {

/// Gate appended after a measurement, or inversion of a measured circuit.
class OrderingError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class NotInvertibleError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Request exceeds a hard resource guard (e.g. full-unitary qubit limit).
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedGateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedInstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Textual input rejected; carries 1-based line/column when known (0 = n/a).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &msg, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) +
                                        (column ? ", column " + std::to_string(column) : "") + ": " + msg
                                  : msg),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace qfalu
