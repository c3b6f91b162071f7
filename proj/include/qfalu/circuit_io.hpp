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

#include <iosfwd>
#include <string>

#include "qfalu/circuit.hpp"

namespace qfalu {

// Text circuit format, one op per line:
//
//   # comment
//   qubits <n>
//   clbits <m>
//   <kind> [angle] q<i> [q<j>] [-> c<k>]
//
// Angles are printed with std::to_chars shortest round-trip formatting, so
// parse(serialize(c)) is structurally equal to c bit-exactly.

std::string serialize(const Circuit &c);
void serialize(const Circuit &c, std::ostream &out);

Circuit parse_circuit(const std::string &text, const std::string &name = "");
Circuit parse_circuit_stream(std::istream &in, const std::string &name = "");
Circuit load_circuit(const std::string &path);
void save_circuit(const Circuit &c, const std::string &path);

/// Shortest decimal form of `value` that parses back to the same double.
std::string format_double(double value);

} // namespace qfalu
