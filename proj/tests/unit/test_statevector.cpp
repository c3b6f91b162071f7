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
#include <random>

#include "doctest.h"

#include "qfalu/circuit.hpp"
#include "qfalu/errors.hpp"
#include "qfalu/qft.hpp"
#include "qfalu/statevector.hpp"
#include "test_util.hpp"

using namespace qfalu;

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
} // namespace

TEST_CASE("basis state preparation follows the LSB-first convention") {
    const StateVector zero = StateVector::basis(2, "00");
    CHECK(zero.amplitude(0) == Complex{1.0, 0.0});

    // "10" sets q1, which is basis bit 1
    const StateVector two = StateVector::basis(2, "10");
    CHECK(two.amplitude(2) == Complex{1.0, 0.0});
    CHECK(two.probability(0) == 0.0);

    CHECK_THROWS_AS(StateVector::basis(1, "01"), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::basis(2, "0x"), std::invalid_argument);
}

TEST_CASE("single gates act as their matrices") {
    StateVector state(1);
    state.apply(GateOp::h(0));
    CHECK(std::abs(state.amplitude(0) - Complex{kInvSqrt2, 0}) < 1e-15);
    CHECK(std::abs(state.amplitude(1) - Complex{kInvSqrt2, 0}) < 1e-15);

    StateVector one = StateVector::basis(1, "1");
    one.apply(GateOp::p(kPi / 3, 0));
    CHECK(std::abs(one.amplitude(1) - std::polar(1.0, kPi / 3)) < 1e-15);
    StateVector still_zero(1);
    still_zero.apply(GateOp::p(kPi / 3, 0));
    CHECK(still_zero.amplitude(0) == Complex{1.0, 0.0});

    StateVector both = StateVector::basis(2, "11");
    both.apply(GateOp::cp(kPi, 0, 1));
    CHECK(std::abs(both.amplitude(3) - Complex{-1.0, 0.0}) < 1e-15);

    CHECK_THROWS_AS(StateVector(1).apply(GateOp::measure(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(1).apply(GateOp::h(1)), std::invalid_argument);
}

TEST_CASE("run applies the whole circuit to the prepared basis state") {
    const StateVector qft1 = run(build_qft(1), "0");
    CHECK(std::abs(qft1.amplitude(0) - Complex{kInvSqrt2, 0}) < 1e-15);
    CHECK(std::abs(qft1.amplitude(1) - Complex{kInvSqrt2, 0}) < 1e-15);

    // x = 1 column of the 2-qubit Fourier transform: (1, i, -1, -i)/2
    const StateVector qft2 = run(build_qft(2), "01");
    CHECK(std::abs(qft2.amplitude(0) - Complex{0.5, 0.0}) < 1e-12);
    CHECK(std::abs(qft2.amplitude(1) - Complex{0.0, 0.5}) < 1e-12);
    CHECK(std::abs(qft2.amplitude(2) - Complex{-0.5, 0.0}) < 1e-12);
    CHECK(std::abs(qft2.amplitude(3) - Complex{0.0, -0.5}) < 1e-12);

    const StateVector idle = run(Circuit(3), "101");
    CHECK(idle.amplitude(5) == Complex{1.0, 0.0});
}

TEST_CASE("unitary_of matches gates and guards resources") {
    Circuit h(1);
    h.append(GateOp::h(0));
    const CMatrix uh = unitary_of(h);
    CHECK(std::abs(uh.at(0, 0) - Complex{kInvSqrt2, 0}) < 1e-15);
    CHECK(std::abs(uh.at(1, 1) - Complex{-kInvSqrt2, 0}) < 1e-15);

    CHECK(unitary_of(build_qft(3)).max_abs_diff(dft_matrix(3)) < 1e-10);

    Circuit round_trip(2);
    round_trip.extend(build_qft(2));
    round_trip.extend(build_iqft(2));
    CHECK(unitary_of(round_trip).deviation_from_identity() < 1e-12);

    Circuit measured(1, 1);
    measured.append(GateOp::measure(0, 0));
    CHECK_THROWS_AS(unitary_of(measured), std::invalid_argument);
    CHECK_THROWS_AS(unitary_of(Circuit(11)), ResourceLimitError);
}

TEST_CASE("norm is conserved through random circuits") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 12; ++rep) {
        const auto n_qubits = std::uint32_t(1 + rng() % 5);
        const Circuit c = test::random_circuit(rng, n_qubits, 30);
        StateVector state(n_qubits);
        for (const auto &op : c.ops()) {
            state.apply(op);
            CHECK(std::abs(state.norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("running a suffix equals applying its unitary to the prefix state") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 6; ++rep) {
        const auto n_qubits = std::uint32_t(2 + rng() % 4);
        const Circuit prefix = test::random_circuit(rng, n_qubits, 12);
        const Circuit suffix = test::random_circuit(rng, n_qubits, 12);

        Circuit whole(n_qubits);
        whole.extend(prefix);
        whole.extend(suffix);
        const StateVector direct = run(whole, std::string(n_qubits, '0'));

        const StateVector mid = run(prefix, std::string(n_qubits, '0'));
        const CMatrix u = unitary_of(suffix);
        double worst = 0.0;
        for (std::size_t row = 0; row < mid.dim(); ++row) {
            Complex acc{};
            for (std::size_t col = 0; col < mid.dim(); ++col) {
                acc += u.at(row, col) * mid.amplitude(col);
            }
            worst = std::max(worst, std::abs(acc - direct.amplitude(row)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("sampling a fair coin stays within the binomial envelope") {
    Circuit c(1, 1);
    c.append(GateOp::h(0));
    c.append(GateOp::measure(0, 0));

    const ShotHistogram hist = sample(c, "0", 4096, 1);
    REQUIRE(hist.counts.size() == 2);
    const double sigma = std::sqrt(4096 * 0.25);
    CHECK(std::abs(double(hist.counts.at("0")) - 2048.0) < 5 * sigma);
    CHECK(std::abs(double(hist.counts.at("1")) - 2048.0) < 5 * sigma);
    CHECK(hist.counts.at("0") + hist.counts.at("1") == 4096);

    CHECK_THROWS_AS(sample(c, "0", 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample(Circuit(1), "0", 16, 1), std::invalid_argument);
}

TEST_CASE("sampling is a pure function of its arguments") {
    Circuit c(2, 2);
    c.extend(build_qft(2));
    c.append(GateOp::measure(0, 0));
    c.append(GateOp::measure(1, 1));

    const ShotHistogram a = sample(c, "01", 2048, 99);
    const ShotHistogram b = sample(c, "01", 2048, 99);
    CHECK(a.counts == b.counts);
    CHECK(a.seed == 99);

    const ShotHistogram other_seed = sample(c, "01", 2048, 100);
    CHECK(a.counts != other_seed.counts); // 2048 draws colliding would be astonishing
}

TEST_CASE("empirical frequencies converge to the amplitude distribution") {
    Circuit c(2, 2);
    c.extend(build_qft(2));
    c.append(GateOp::measure(0, 0));
    c.append(GateOp::measure(1, 1));

    const std::uint64_t shots = 65536;
    const ShotHistogram hist = sample(c, "01", shots, 7);
    const double p = 0.25;
    const double bound = 5.0 * std::sqrt(p * (1 - p) / double(shots));
    for (const auto &key : {"00", "01", "10", "11"}) {
        const double freq = double(hist.counts.at(key)) / double(shots);
        CHECK(std::abs(freq - p) < bound);
    }
}

TEST_CASE("histogram text renderings") {
    ShotHistogram h;
    h.shots = 6;
    h.seed = 1;
    h.counts = {{"00", 4}, {"11", 2}};
    CHECK(histogram_to_json(h) == "{\"00\": 4, \"11\": 2}");
    const std::string chart = histogram_to_chart(h, 8);
    CHECK(chart.find("00 ######## 4") != std::string::npos);
    CHECK(chart.find("11 #### 2") != std::string::npos);
}
