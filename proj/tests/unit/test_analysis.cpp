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
#include <cstdint>

#include "doctest.h"

#include "qfalu/analysis.hpp"
#include "qfalu/statevector.hpp"
#include "qfalu/transpile.hpp"
#include "test_util.hpp"

using namespace qfalu;

TEST_CASE("closed-form gate counts") {
    CHECK(count_parallel(1) == 10);
    CHECK(count_parallel(2) == 23);
    CHECK(count_parallel(3) == 52);
    CHECK(count_serial(1) == 10);
    CHECK(count_serial(2) == 51);
    CHECK(count_serial(3) == 196);
    CHECK_THROWS_AS(count_parallel(0), std::invalid_argument);
    CHECK_THROWS_AS(count_serial(0), std::invalid_argument);
}

TEST_CASE("report rows") {
    const auto rows = report(2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].inputs == 2);
    CHECK(rows[0].serial_count == 10);
    CHECK(rows[0].parallel_count == 10);
    CHECK(rows[1].n == 2);
    CHECK(rows[1].inputs == 4);
    CHECK(rows[1].serial_count == 51);
    CHECK(rows[1].parallel_count == 23);
}

TEST_CASE("formulas agree with the generated circuits") {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        CHECK(gate_count(parallel_adder_portion(n)) == count_parallel(n));
        CHECK(gate_count(build_serial_adder_reference(n)) == count_serial(n));
    }
}

TEST_CASE("serial reference circuit really adds its inputs") {
    for (std::uint32_t n : {1u, 2u}) {
        const std::uint32_t k = 1u << n;
        const std::uint32_t m = n + 1;
        const Circuit c = build_serial_adder_reference(n);
        REQUIRE(c.num_qubits() == m + k - 1);
        for (std::uint32_t first = 0; first <= 1; ++first) {
            for (std::uint32_t controls = 0; controls < (1u << (k - 1)); ++controls) {
                std::size_t index = first; // accumulator starts at the first input bit
                index |= std::size_t{controls} << m;
                const StateVector out = run(c, test::basis_bits(c.num_qubits(), index));
                const std::uint32_t total = first + std::uint32_t(std::popcount(controls));
                const std::size_t expect = total | (std::size_t{controls} << m);
                CHECK(out.probability(expect) > 1.0 - 1e-9);
            }
        }
    }
}

TEST_CASE("parallel wins for every n from 2 to 8") {
    const auto rows = report(8);
    CHECK(rows[0].serial_count == rows[0].parallel_count);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].serial_count > rows[i].parallel_count);
        CHECK(rows[i].serial_count > rows[i - 1].serial_count);
        CHECK(rows[i].parallel_count > rows[i - 1].parallel_count);
    }
}

TEST_CASE("asymptotic behaviour of both counts") {
    const std::uint32_t n = 8;
    const double k = double(std::uint64_t{1} << n);
    const double m = n + 1;
    CHECK(std::abs(double(count_parallel(n)) / (k * m) - 1.0) < 0.06);
    const double per_addition = 2.0 * double(qft_gate_cost(n + 1)) + m;
    CHECK(std::abs(double(count_serial(n)) / (k * per_addition) - 1.0) < 0.01);
}

TEST_CASE("CSV and chart exports") {
    const auto rows = report(2);
    CHECK(report_to_csv(rows) == "n,inputs,serial,parallel\n"
                                 "1,2,10,10\n"
                                 "2,4,51,23\n");

    const std::string with_transpiled = report_to_csv(rows, true);
    CHECK(with_transpiled.find("serial_transpiled,parallel_transpiled") != std::string::npos);
    // transpiled counts only ever grow
    const std::uint64_t serial_transpiled = gate_count(decompose(build_serial_adder_reference(2)));
    const std::uint64_t parallel_transpiled = gate_count(decompose(parallel_adder_portion(2)));
    CHECK(serial_transpiled >= 51);
    CHECK(parallel_transpiled >= 23);
    CHECK(with_transpiled.find("2,4,51,23," + std::to_string(serial_transpiled) + "," +
                               std::to_string(parallel_transpiled)) != std::string::npos);

    const std::string chart = report_to_chart_json(report(1));
    CHECK(chart == "{\"rows\": [{\"n\": 1, \"inputs\": 2, \"serial\": 10, \"parallel\": 10}]}");
}
