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

#include <optional>
#include <string>
#include <vector>

#include "qfalu/circuit.hpp"
#include "qfalu/noise.hpp"

namespace qfalu {

enum class AluMode : std::uint8_t { Add, Nand };

/// Wire roles of a built ALU circuit. The sum register is inputs[0] as the
/// least-significant bit followed by the ancillas in ascending significance;
/// result_clbits[i] receives significance-i of the register.
struct QaluLayout {
    QubitIndex select = 0;
    std::vector<QubitIndex> inputs;
    std::vector<QubitIndex> ancillas;
    std::vector<ClbitIndex> result_clbits;
    /// NAND needs "sum == k exactly when the top register bit is set",
    /// which holds only for k a power of two. ADD works for every k.
    bool nand_supported = true;
};

struct QaluCircuit {
    Circuit circuit;
    QaluLayout layout;
};

struct AluResult {
    std::string bits; // c_{m-1}...c1c0
    AluMode mode = AluMode::Add;
    double success_probability = 0.0;
};

/// Two-input one-bit ALU over qubits [S, q0, q1, A]:
/// swap-free QFT on the (q0, A) register, controlled phases from q1 adding
/// one in Fourier space (CP(pi) onto q0, CP(pi/2) onto A), the inverse QFT,
/// CX(S -> A), and measurement of q0 -> c0, A -> c1. With S=0 the register
/// reads q0+q1 in binary (c1 carry, c0 sum); with S=1 the carry is
/// complemented, so c1 = NAND(q0, q1).
QaluCircuit build_qalu2();

/// k-input one-bit ALU over qubits [S, q0..q_{k-1}, A0..A_{m-2}] with
/// m = ceil(log2(k+1)): one QFT (swaps included) on the m-qubit sum
/// register, a fan of m controlled phases per remaining input, the inverse
/// QFT, CX(S -> top ancilla), and register measurement onto c0..c_{m-1}.
/// S=0 reads the input sum in binary; S=1 complements the top bit, which is
/// the k-way NAND exactly when k is a power of two (nand_supported).
QaluCircuit build_qalu_multi(std::uint32_t k);

/// In-place Fourier adder |a, b> -> |a+b mod 2^m, b> on 2m qubits; register
/// a is qubits 0..m-1 (bit j at qubit j), register b is qubits m..2m-1.
Circuit build_fourier_adder(std::uint32_t m);

/// Register width m = ceil(log2(k+1)) needed to hold the sum of k bits.
std::uint32_t qalu_register_width(std::uint32_t k);

/// MSB-first preparation string for the circuit: ancillas zero, the select
/// qubit and each input set as given.
std::string qalu_initial_bits(const QaluCircuit &qalu, const std::vector<int> &inputs, int select);

/// Prepare inputs/select, sample, and report the modal classical register
/// string with its empirical probability.
AluResult run_qalu(const QaluCircuit &qalu, const std::vector<int> &inputs, int select,
                   std::uint64_t shots, std::uint64_t seed,
                   const std::optional<NoiseParams> &noise = std::nullopt);

} // namespace qfalu
