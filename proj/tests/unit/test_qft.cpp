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

#include <cmath>

#include "doctest.h"

#include "qfalu/errors.hpp"
#include "qfalu/qft.hpp"
#include "qfalu/statevector.hpp"
#include "test_util.hpp"

using namespace qfalu;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

TEST_CASE("one-qubit transform is a lone Hadamard") {
    const Circuit c = build_qft(1);
    REQUIRE(c.size() == 1);
    CHECK(c.ops()[0] == GateOp::h(0));
    CHECK(build_iqft(1).ops()[0] == GateOp::h(0));
}

TEST_CASE("three-qubit construction: gates, angles, order") {
    const Circuit c = build_qft(3);
    REQUIRE(c.size() == 7);
    CHECK(c.ops()[0] == GateOp::h(2));
    CHECK(c.ops()[1] == GateOp::cp(kPi / 2, 1, 2));
    CHECK(c.ops()[2] == GateOp::cp(kPi / 4, 0, 2));
    CHECK(c.ops()[3] == GateOp::h(1));
    CHECK(c.ops()[4] == GateOp::cp(kPi / 2, 0, 1));
    CHECK(c.ops()[5] == GateOp::h(0));
    CHECK(c.ops()[6] == GateOp::swap(0, 2));
}

TEST_CASE("swap-free variant is the bit-reversed transform") {
    const Circuit c = build_qft(2, /*include_swaps=*/false);
    REQUIRE(c.size() == 3);
    CHECK(c.ops()[0] == GateOp::h(1));
    CHECK(c.ops()[1] == GateOp::cp(kPi / 2, 0, 1));
    CHECK(c.ops()[2] == GateOp::h(0));

    const CMatrix u = unitary_of(c);
    const CMatrix dft = dft_matrix(2);
    double worst = 0.0;
    for (std::size_t y = 0; y < 4; ++y) {
        const std::size_t reversed = ((y & 1) << 1) | (y >> 1);
        for (std::size_t x = 0; x < 4; ++x) {
            worst = std::max(worst, std::abs(u.at(reversed, x) - dft.at(y, x)));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("inverse transform is the inverse circuit") {
    const QftParams params{3, true};
    CHECK(build_iqft(params).structurally_equal(inverse(build_qft(params))));
    CHECK(gate_count(build_iqft(3)) == 7);

    Circuit round_trip(3);
    round_trip.extend(build_qft(3));
    round_trip.extend(build_iqft(3));
    for (std::size_t basis = 0; basis < 8; ++basis) {
        const StateVector out = run(round_trip, test::basis_bits(3, basis));
        CHECK(out.probability(basis) > 1.0 - 1e-12);
    }
}

TEST_CASE("dft_matrix values and unitarity") {
    const CMatrix m1 = dft_matrix(1);
    CHECK(std::abs(m1.at(0, 0) - Complex{1 / std::sqrt(2.0), 0}) < 1e-15);
    CHECK(std::abs(m1.at(1, 1) - Complex{-1 / std::sqrt(2.0), 0}) < 1e-15);

    const CMatrix m2 = dft_matrix(2);
    CHECK(std::abs(m2.at(0, 1) - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(m2.at(1, 1) - Complex{0.0, 0.5}) < 1e-15);
    CHECK(std::abs(m2.at(2, 1) - Complex{-0.5, 0.0}) < 1e-15);
    CHECK(std::abs(m2.at(3, 1) - Complex{0.0, -0.5}) < 1e-15);

    for (std::uint32_t n = 1; n <= 6; ++n) {
        const CMatrix m = dft_matrix(n);
        CHECK((m * m.adjoint()).deviation_from_identity() < 1e-12);
    }
    CHECK_THROWS_AS(dft_matrix(11), ResourceLimitError);
    CHECK_THROWS_AS(dft_matrix(0), std::invalid_argument);
}

TEST_CASE("circuit equals the Fourier matrix oracle for n = 1..5") {
    for (std::uint32_t n = 1; n <= 5; ++n) {
        CHECK(unitary_of(build_qft(n)).max_abs_diff(dft_matrix(n)) < 1e-10);
    }
}

TEST_CASE("gate count formula: n H, n(n-1)/2 CP, floor(n/2) SWAP") {
    for (std::uint32_t n = 1; n <= 8; ++n) {
        const Circuit c = build_qft(n);
        CHECK(gate_count(c, {GateKind::H}) == n);
        CHECK(gate_count(c, {GateKind::CP}) == n * (n - 1) / 2);
        CHECK(gate_count(c, {GateKind::SWAP}) == n / 2);
        CHECK(gate_count(c) == n + n * (n - 1) / 2 + n / 2);
    }
}

TEST_CASE("builder is deterministic in its parameters") {
    CHECK(build_qft(4).structurally_equal(build_qft(4)));
    CHECK_FALSE(build_qft(4, false).structurally_equal(build_qft(4, true)));
    CHECK_THROWS_AS(build_qft(0), std::invalid_argument);
}
