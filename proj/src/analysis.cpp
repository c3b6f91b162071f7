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

#include "qfalu/analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "qfalu/alu.hpp"
#include "qfalu/qft.hpp"
#include "qfalu/transpile.hpp"

namespace qfalu {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

void check_exponent(std::uint32_t n) {
    if (n < 1) {
        throw std::invalid_argument("exponent n must be at least 1");
    }
    if (n > 20) {
        throw std::invalid_argument("exponent n too large (max 20)");
    }
}

} // namespace

std::uint64_t qft_gate_cost(std::uint32_t m) {
    return std::uint64_t{m} + std::uint64_t{m} * (m - 1) / 2 + m / 2;
}

std::uint64_t count_parallel(std::uint32_t n) {
    check_exponent(n);
    const std::uint64_t k = std::uint64_t{1} << n;
    const std::uint32_t m = n + 1;
    return 2 * qft_gate_cost(m) + (k - 1) * m;
}

std::uint64_t count_serial(std::uint32_t n) {
    check_exponent(n);
    const std::uint64_t k = std::uint64_t{1} << n;
    const std::uint32_t m = n + 1;
    return (k - 1) * (2 * qft_gate_cost(m) + m);
}

std::vector<GateCountRow> report(std::uint32_t n_max) {
    check_exponent(n_max);
    std::vector<GateCountRow> rows;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        rows.push_back({n, std::uint64_t{1} << n, count_serial(n), count_parallel(n)});
    }
    return rows;
}

Circuit parallel_adder_portion(std::uint32_t n) {
    check_exponent(n);
    if (n > 10) {
        throw std::invalid_argument("constructive cross-check limited to n <= 10");
    }
    const Circuit full = build_qalu_multi(1u << n).circuit;
    Circuit out(full.num_qubits(), 0, full.name() + "_adder");
    for (const auto &op : full.ops()) {
        if (op.kind == GateKind::CX || op.kind == GateKind::Measure) {
            continue; // the only CX is the select stage
        }
        out.append(op);
    }
    return out;
}

Circuit build_serial_adder_reference(std::uint32_t n) {
    check_exponent(n);
    if (n > 10) {
        throw std::invalid_argument("constructive cross-check limited to n <= 10");
    }
    const std::uint32_t k = 1u << n;
    const std::uint32_t m = n + 1;
    Circuit c(m + (k - 1), 0, "serial_adder" + std::to_string(k));
    const Circuit qft = build_qft(m, /*include_swaps=*/true);
    for (std::uint32_t j = 0; j < k - 1; ++j) {
        const QubitIndex control = m + j;
        c.extend(qft);
        for (std::uint32_t l = 0; l < m; ++l) {
            c.append(GateOp::cp(kPi / double(1u << (m - 1 - l)), control, l));
        }
        c.extend(inverse(qft));
    }
    return c;
}

std::string report_to_csv(const std::vector<GateCountRow> &rows, bool with_transpiled) {
    std::ostringstream out;
    out << "n,inputs,serial,parallel";
    if (with_transpiled) {
        out << ",serial_transpiled,parallel_transpiled";
    }
    out << "\n";
    for (const auto &row : rows) {
        out << row.n << ',' << row.inputs << ',' << row.serial_count << ',' << row.parallel_count;
        if (with_transpiled) {
            out << ',' << gate_count(decompose(build_serial_adder_reference(row.n))) << ','
                << gate_count(decompose(parallel_adder_portion(row.n)));
        }
        out << "\n";
    }
    return out.str();
}

std::string report_to_chart_json(const std::vector<GateCountRow> &rows) {
    std::ostringstream out;
    out << "{\"rows\": [";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &row = rows[i];
        out << (i ? ", " : "") << "{\"n\": " << row.n << ", \"inputs\": " << row.inputs
            << ", \"serial\": " << row.serial_count << ", \"parallel\": " << row.parallel_count << "}";
    }
    out << "]}";
    return out.str();
}

} // namespace qfalu
