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

#include <string>
#include <vector>

#include "qfalu/circuit.hpp"

namespace qfalu {

// Gate budget for adding k = 2^n one-bit numbers, counting every H, CP,
// SWAP (and CX after transpilation) as one gate. The parallel design is one
// QFT / phase-fan / inverse-QFT pass over an m = n+1 bit register; the
// serial design repeats a full two-term Fourier addition k-1 times into the
// same register. Select logic and measurements are excluded from both.

struct GateCountRow {
    std::uint32_t n = 0;
    std::uint64_t inputs = 0;
    std::uint64_t serial_count = 0;
    std::uint64_t parallel_count = 0;
};

/// H/CP/SWAP cost of one m-qubit QFT: m + m(m-1)/2 + floor(m/2).
std::uint64_t qft_gate_cost(std::uint32_t m);

/// 2*qft_gate_cost(m) + (k-1)*m with k = 2^n, m = n+1.
std::uint64_t count_parallel(std::uint32_t n);

/// (k-1) * (2*qft_gate_cost(m) + m).
std::uint64_t count_serial(std::uint32_t n);

std::vector<GateCountRow> report(std::uint32_t n_max);

/// The adder portion of the generated k-input ALU (select CX and
/// measurements stripped); gate_count of it must equal count_parallel(n).
Circuit parallel_adder_portion(std::uint32_t n);

/// Constructive serial composition: k-1 sequential one-bit Fourier
/// additions into an (n+1)-bit accumulator (accumulator qubits 0..n, one
/// control qubit per remaining input). gate_count equals count_serial(n),
/// and the circuit really adds its inputs.
Circuit build_serial_adder_reference(std::uint32_t n);

/// Rows as `n,inputs,serial,parallel` CSV; with_transpiled appends the
/// basis-gate counts of both generated circuits after decompose().
std::string report_to_csv(const std::vector<GateCountRow> &rows, bool with_transpiled = false);
std::string report_to_chart_json(const std::vector<GateCountRow> &rows);

} // namespace qfalu
