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

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "qfalu/alu.hpp"
#include "qfalu/statevector.hpp"
#include "test_util.hpp"

using namespace qfalu;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

/// Classical reference: the m-bit binary sum, top bit complemented in NAND
/// mode (that bit equals the k-way AND when the input count is a power of
/// two, so its complement is the NAND).
std::string oracle_bits(const std::vector<int> &inputs, int select) {
    const auto m = qalu_register_width(static_cast<std::uint32_t>(inputs.size()));
    std::uint32_t sum = 0;
    for (int bit : inputs) {
        sum += std::uint32_t(bit);
    }
    if (select == 1) {
        sum ^= 1u << (m - 1);
    }
    std::string bits(m, '0');
    for (std::uint32_t l = 0; l < m; ++l) {
        if (sum & (1u << l)) {
            bits[m - 1 - l] = '1';
        }
    }
    return bits;
}

std::vector<int> input_bits(std::uint32_t k, std::uint32_t pattern) {
    std::vector<int> bits(k);
    for (std::uint32_t j = 0; j < k; ++j) {
        bits[j] = int((pattern >> j) & 1);
    }
    return bits;
}

/// Probability that measuring the circuit run on (inputs, select) yields the
/// expected classical register string, straight off the final state.
double outcome_probability(const QaluCircuit &qalu, const std::vector<int> &inputs, int select,
                           const std::string &expected) {
    const StateVector state = run(qalu.circuit, qalu_initial_bits(qalu, inputs, select));
    double p = 0.0;
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        if (classical_bits_for_outcome(qalu.circuit, idx) == expected) {
            p += state.probability(idx);
        }
    }
    return p;
}

} // namespace

TEST_CASE("two-input ALU circuit structure") {
    const QaluCircuit qalu = build_qalu2();
    const Circuit &c = qalu.circuit;
    CHECK(c.num_qubits() == 4);
    CHECK(c.num_clbits() == 2);

    CHECK(qalu.layout.select == 0);
    CHECK(qalu.layout.inputs == std::vector<QubitIndex>{1, 2});
    CHECK(qalu.layout.ancillas == std::vector<QubitIndex>{3});
    CHECK(qalu.layout.result_clbits == std::vector<ClbitIndex>{0, 1});
    CHECK(qalu.layout.nand_supported);

    REQUIRE(c.size() == 11);
    CHECK(c.ops()[0] == GateOp::h(3));
    CHECK(c.ops()[1] == GateOp::cp(kPi / 2, 1, 3));
    CHECK(c.ops()[2] == GateOp::h(1));
    CHECK(c.ops()[3] == GateOp::cp(kPi, 2, 1));
    CHECK(c.ops()[4] == GateOp::cp(kPi / 2, 2, 3));
    CHECK(c.ops()[5] == GateOp::h(1));
    CHECK(c.ops()[6] == GateOp::cp(-kPi / 2, 1, 3));
    CHECK(c.ops()[7] == GateOp::h(3));
    CHECK(c.ops()[8] == GateOp::cx(0, 3));
    CHECK(c.ops()[9] == GateOp::measure(1, 0));
    CHECK(c.ops()[10] == GateOp::measure(3, 1));
}

TEST_CASE("two-input ALU reproduces the device-run outcomes") {
    const QaluCircuit qalu = build_qalu2();

    const AluResult add = run_qalu(qalu, {1, 1}, 0, 1024, 1);
    CHECK(add.bits == "10");
    CHECK(add.mode == AluMode::Add);
    CHECK(add.success_probability == 1.0);

    const AluResult nand = run_qalu(qalu, {1, 1}, 1, 1024, 1);
    CHECK(nand.bits == "00");
    CHECK(nand.mode == AluMode::Nand);
    CHECK(nand.success_probability == 1.0);

    CHECK(run_qalu(qalu, {0, 0}, 0, 1024, 1).bits == "00");
    CHECK(run_qalu(qalu, {1, 0}, 0, 1024, 1).bits == "01");
}

TEST_CASE("two-input ALU truth tables, exhaustively") {
    const QaluCircuit qalu = build_qalu2();
    for (int select = 0; select <= 1; ++select) {
        for (std::uint32_t pattern = 0; pattern < 4; ++pattern) {
            const auto inputs = input_bits(2, pattern);
            const std::string expected = oracle_bits(inputs, select);
            CHECK(outcome_probability(qalu, inputs, select, expected) > 1.0 - 1e-9);
            const AluResult result = run_qalu(qalu, inputs, select, 256, 3);
            CHECK(result.bits == expected);
        }
    }
}

TEST_CASE("NAND mode leaves the sum bit as the XOR of the inputs") {
    const QaluCircuit qalu = build_qalu2();
    for (std::uint32_t pattern = 0; pattern < 4; ++pattern) {
        const auto inputs = input_bits(2, pattern);
        const AluResult result = run_qalu(qalu, inputs, 1, 256, 5);
        const char expected_c0 = (inputs[0] ^ inputs[1]) ? '1' : '0';
        CHECK(result.bits[1] == expected_c0);
    }
}

TEST_CASE("the select qubit is never disturbed") {
    const QaluCircuit qalu = build_qalu2();
    for (int select = 0; select <= 1; ++select) {
        for (std::uint32_t pattern = 0; pattern < 4; ++pattern) {
            const auto inputs = input_bits(2, pattern);
            const StateVector state = run(qalu.circuit, qalu_initial_bits(qalu, inputs, select));
            for (std::size_t idx = 0; idx < state.dim(); ++idx) {
                if (state.probability(idx) > 1e-9) {
                    CHECK(int(idx & 1) == select);
                }
            }
        }
    }
}

TEST_CASE("four-input ALU matches the oracle on every case") {
    const QaluCircuit qalu = build_qalu_multi(4);
    CHECK(qalu.circuit.num_qubits() == 7);
    CHECK(qalu.circuit.num_clbits() == 3);
    CHECK(qalu.layout.ancillas.size() == 2);
    CHECK(qalu.layout.nand_supported);

    for (int select = 0; select <= 1; ++select) {
        for (std::uint32_t pattern = 0; pattern < 16; ++pattern) {
            const auto inputs = input_bits(4, pattern);
            const std::string expected = oracle_bits(inputs, select);
            CHECK(outcome_probability(qalu, inputs, select, expected) > 1.0 - 1e-9);
            CHECK(run_qalu(qalu, inputs, select, 128, 7).bits == expected);
        }
    }

    CHECK(run_qalu(qalu, {1, 1, 1, 1}, 0, 256, 1).bits == "100");
    CHECK(run_qalu(qalu, {1, 1, 1, 1}, 1, 256, 1).bits == "000");
    CHECK(run_qalu(qalu, {1, 0, 1, 0}, 0, 256, 1).bits == "010");
}

TEST_CASE("two-input general builder agrees with the dedicated one") {
    const QaluCircuit direct = build_qalu2();
    const QaluCircuit general = build_qalu_multi(2);
    for (int select = 0; select <= 1; ++select) {
        for (std::uint32_t pattern = 0; pattern < 4; ++pattern) {
            const auto inputs = input_bits(2, pattern);
            const AluResult a = run_qalu(direct, inputs, select, 64, 11);
            const AluResult b = run_qalu(general, inputs, select, 64, 11);
            CHECK(a.bits == b.bits);
        }
    }
}

TEST_CASE("input counts that are not powers of two: ADD works, NAND refuses") {
    for (std::uint32_t k : {3u, 5u, 6u, 7u}) {
        const QaluCircuit qalu = build_qalu_multi(k);
        CHECK_FALSE(qalu.layout.nand_supported);
        CHECK_THROWS_AS(run_qalu(qalu, std::vector<int>(k, 1), 1, 16, 1), std::invalid_argument);

        for (std::uint32_t pattern = 0; pattern < (1u << k); ++pattern) {
            const auto inputs = input_bits(k, pattern);
            const std::string expected = oracle_bits(inputs, 0);
            CHECK(run_qalu(qalu, inputs, 0, 32, 13).bits == expected);
        }
    }
    CHECK(build_qalu_multi(8).layout.nand_supported);
    CHECK_THROWS_AS(build_qalu_multi(1), std::invalid_argument);
    CHECK_THROWS_AS(build_qalu_multi(0), std::invalid_argument);
}

TEST_CASE("run_qalu validates its inputs") {
    const QaluCircuit qalu = build_qalu2();
    CHECK_THROWS_AS(run_qalu(qalu, {1}, 0, 16, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_qalu(qalu, {1, 2}, 0, 16, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_qalu(qalu, {1, 1}, 2, 16, 1), std::invalid_argument);
}

TEST_CASE("Fourier adder implements |a,b> -> |a+b mod 2^m, b>") {
    for (std::uint32_t m = 1; m <= 3; ++m) {
        const Circuit adder = build_fourier_adder(m);
        CHECK(adder.num_qubits() == 2 * m);
        const std::uint32_t size = 1u << m;
        for (std::uint32_t a = 0; a < size; ++a) {
            for (std::uint32_t b = 0; b < size; ++b) {
                const std::size_t in_index = a | (std::size_t{b} << m);
                const std::size_t out_index = ((a + b) % size) | (std::size_t{b} << m);
                const StateVector state =
                    run(adder, test::basis_bits(2 * m, in_index));
                CHECK(state.probability(out_index) > 1.0 - 1e-12);
            }
        }
    }
}

TEST_CASE("Fourier adder unitary is a basis permutation") {
    for (std::uint32_t m = 1; m <= 3; ++m) {
        const CMatrix u = unitary_of(build_fourier_adder(m));
        const std::uint32_t size = 1u << m;
        for (std::size_t col = 0; col < u.dim(); ++col) {
            const std::size_t a = col & (size - 1);
            const std::size_t b = col >> m;
            const std::size_t expected_row = ((a + b) % size) | (b << m);
            for (std::size_t row = 0; row < u.dim(); ++row) {
                const double magnitude = std::abs(u.at(row, col));
                if (row == expected_row) {
                    CHECK(std::abs(magnitude - 1.0) < 1e-10);
                } else {
                    CHECK(magnitude < 1e-10);
                }
            }
        }
    }
    CHECK_THROWS_AS(build_fourier_adder(0), std::invalid_argument);
}
