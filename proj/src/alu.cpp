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

#include "qfalu/alu.hpp"

#include <stdexcept>

#include "qfalu/qft.hpp"
#include "qfalu/statevector.hpp"

namespace qfalu {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

/// Append `block` with its qubit i rewired to mapping[i].
void append_mapped(Circuit &c, const Circuit &block, const std::vector<QubitIndex> &mapping) {
    for (GateOp op : block.ops()) {
        op.qubits[0] = mapping[op.qubits[0]];
        if (op.arity() == 2) {
            op.qubits[1] = mapping[op.qubits[1]];
        }
        c.append(op);
    }
}

// The two Fourier frames used below. After a swap-free QFT the register
// qubit of significance l holds the phase role of significance m-1-l, so the
// fan adding 2^j puts CP(pi/2^(l-j)) on it for l >= j (lower l would be a
// whole turn). After a QFT with swaps the roles sit in natural order and the
// same addition puts CP(pi/2^(m-1-l-j)) on significance l for l+j < m.

void fan_add_pow2_swapfree(Circuit &c, QubitIndex control, const std::vector<QubitIndex> &reg,
                           std::uint32_t j) {
    const auto m = static_cast<std::uint32_t>(reg.size());
    for (std::uint32_t l = j; l < m; ++l) {
        c.append(GateOp::cp(kPi / double(1u << (l - j)), control, reg[l]));
    }
}

void fan_add_one_swapped(Circuit &c, QubitIndex control, const std::vector<QubitIndex> &reg) {
    const auto m = static_cast<std::uint32_t>(reg.size());
    for (std::uint32_t l = 0; l < m; ++l) {
        c.append(GateOp::cp(kPi / double(1u << (m - 1 - l)), control, reg[l]));
    }
}

} // namespace

std::uint32_t qalu_register_width(std::uint32_t k) {
    std::uint32_t m = 1;
    while ((std::uint64_t{1} << m) < std::uint64_t{k} + 1) {
        ++m;
    }
    return m;
}

QaluCircuit build_qalu2() {
    QaluCircuit qalu{Circuit(4, 2, "qalu2"), {}};
    Circuit &c = qalu.circuit;
    QaluLayout &layout = qalu.layout;
    layout.select = 0;
    layout.inputs = {1, 2};
    layout.ancillas = {3};
    layout.result_clbits = {0, 1};
    layout.nand_supported = true;

    const std::vector<QubitIndex> reg = {1, 3}; // q0 = LSB, A = MSB
    const Circuit qft = build_qft(2, /*include_swaps=*/false);

    append_mapped(c, qft, reg);
    fan_add_pow2_swapfree(c, /*control=*/2, reg, 0);
    append_mapped(c, inverse(qft), reg);
    c.append(GateOp::cx(layout.select, reg[1]));
    c.append(GateOp::measure(reg[0], 0));
    c.append(GateOp::measure(reg[1], 1));
    return qalu;
}

QaluCircuit build_qalu_multi(std::uint32_t k) {
    if (k < 2) {
        throw std::invalid_argument("the ALU needs at least 2 inputs");
    }
    const std::uint32_t m = qalu_register_width(k);
    const std::uint32_t n_qubits = 1 + k + (m - 1);

    QaluCircuit qalu{Circuit(n_qubits, m, "qalu" + std::to_string(k)), {}};
    Circuit &c = qalu.circuit;
    QaluLayout &layout = qalu.layout;
    layout.select = 0;
    for (std::uint32_t j = 0; j < k; ++j) {
        layout.inputs.push_back(1 + j);
    }
    for (std::uint32_t a = 0; a < m - 1; ++a) {
        layout.ancillas.push_back(1 + k + a);
    }
    for (std::uint32_t l = 0; l < m; ++l) {
        layout.result_clbits.push_back(l);
    }
    layout.nand_supported = (k == (1u << (m - 1)));

    std::vector<QubitIndex> reg = {layout.inputs[0]};
    reg.insert(reg.end(), layout.ancillas.begin(), layout.ancillas.end());

    const Circuit qft = build_qft(m, /*include_swaps=*/true);
    append_mapped(c, qft, reg);
    for (std::uint32_t j = 1; j < k; ++j) {
        fan_add_one_swapped(c, layout.inputs[j], reg);
    }
    append_mapped(c, inverse(qft), reg);
    c.append(GateOp::cx(layout.select, reg[m - 1]));
    for (std::uint32_t l = 0; l < m; ++l) {
        c.append(GateOp::measure(reg[l], l));
    }
    return qalu;
}

Circuit build_fourier_adder(std::uint32_t m) {
    if (m == 0) {
        throw std::invalid_argument("adder width must be at least 1");
    }
    Circuit c(2 * m, 0, "fourier_adder" + std::to_string(m));
    std::vector<QubitIndex> reg(m);
    for (std::uint32_t l = 0; l < m; ++l) {
        reg[l] = l;
    }
    const Circuit qft = build_qft(m, /*include_swaps=*/false);
    c.extend(qft);
    for (std::uint32_t j = 0; j < m; ++j) {
        fan_add_pow2_swapfree(c, m + j, reg, j);
    }
    c.extend(inverse(qft));
    return c;
}

std::string qalu_initial_bits(const QaluCircuit &qalu, const std::vector<int> &inputs, int select) {
    const QaluLayout &layout = qalu.layout;
    if (inputs.size() != layout.inputs.size()) {
        throw std::invalid_argument("expected " + std::to_string(layout.inputs.size()) +
                                    " input bits, got " + std::to_string(inputs.size()));
    }
    if (select != 0 && select != 1) {
        throw std::invalid_argument("select must be 0 (ADD) or 1 (NAND)");
    }
    const std::uint32_t n = qalu.circuit.num_qubits();
    std::string bits(n, '0');
    const auto set_bit = [&](QubitIndex q, int value) {
        if (value != 0 && value != 1) {
            throw std::invalid_argument("input bits must be 0 or 1");
        }
        bits[n - 1 - q] = value ? '1' : '0';
    };
    set_bit(layout.select, select);
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        set_bit(layout.inputs[j], inputs[j]);
    }
    return bits;
}

AluResult run_qalu(const QaluCircuit &qalu, const std::vector<int> &inputs, int select,
                   std::uint64_t shots, std::uint64_t seed, const std::optional<NoiseParams> &noise) {
    if (select == 1 && !qalu.layout.nand_supported) {
        throw std::invalid_argument("NAND is not supported for " +
                                    std::to_string(qalu.layout.inputs.size()) +
                                    " inputs (input count must be a power of two)");
    }
    const std::string initial = qalu_initial_bits(qalu, inputs, select);
    const ShotHistogram hist = noise.has_value() ? sample_noisy(qalu.circuit, *noise, initial, shots, seed)
                                                 : sample(qalu.circuit, initial, shots, seed);

    AluResult result;
    result.mode = select ? AluMode::Nand : AluMode::Add;
    std::uint64_t best = 0;
    for (const auto &[bits, count] : hist.counts) {
        if (count > best) {
            best = count;
            result.bits = bits;
        }
    }
    result.success_probability = double(best) / double(shots);
    return result;
}

} // namespace qfalu
