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

#include "qfalu/noise.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qfalu/errors.hpp"
#include "qfalu/rng.hpp"

namespace qfalu {

namespace {

std::vector<std::string> split_cells(const std::string &line) {
    std::string normalized = line;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::vector<std::string> cells;
    std::istringstream in(normalized);
    std::string cell;
    while (in >> cell) {
        if (cell[0] == '#') {
            break;
        }
        cells.push_back(cell);
    }
    return cells;
}

double parse_cell(const std::string &cell, std::size_t line_no, std::size_t col) {
    double value = 0.0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw ParseError("non-numeric cell '" + cell + "'", line_no, col);
    }
    return value;
}

bool is_numeric_cell(const std::string &cell) {
    double value = 0.0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    return res.ec == std::errc() && res.ptr == cell.data() + cell.size();
}

} // namespace

std::vector<CalibrationRecord> parse_calibration(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<CalibrationRecord> records;
    std::vector<bool> seen;

    while (std::getline(in, line)) {
        ++line_no;
        auto cells = split_cells(line);
        if (cells.empty()) {
            continue;
        }
        if (!header_seen && !is_numeric_cell(cells[0])) {
            header_seen = true;
            continue;
        }
        header_seen = true;
        if (cells.size() != 4) {
            throw ParseError("expected 4 cells (qubit, T1, T2, frequency), got " +
                                 std::to_string(cells.size()),
                             line_no);
        }
        CalibrationRecord rec;
        const double qubit_value = parse_cell(cells[0], line_no, 1);
        if (qubit_value < 0 || qubit_value != std::floor(qubit_value)) {
            throw ParseError("qubit index must be a non-negative integer", line_no, 1);
        }
        rec.qubit = static_cast<std::uint32_t>(qubit_value);
        rec.t1_us = parse_cell(cells[1], line_no, 2);
        rec.t2_us = parse_cell(cells[2], line_no, 3);
        rec.frequency_ghz = parse_cell(cells[3], line_no, 4);
        if (rec.t1_us <= 0 || rec.t2_us <= 0 || rec.frequency_ghz <= 0) {
            throw ParseError("T1, T2 and frequency must be positive", line_no);
        }
        if (rec.qubit < seen.size() && seen[rec.qubit]) {
            throw ParseError("duplicate qubit index " + std::to_string(rec.qubit), line_no, 1);
        }
        if (rec.qubit >= seen.size()) {
            seen.resize(rec.qubit + 1, false);
        }
        seen[rec.qubit] = true;
        records.push_back(rec);
    }
    std::sort(records.begin(), records.end(),
              [](const CalibrationRecord &a, const CalibrationRecord &b) { return a.qubit < b.qubit; });
    return records;
}

std::vector<CalibrationRecord> load_calibration(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open calibration file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_calibration(buf.str());
}

namespace {

double decay_probability(double duration_ns, double t1_us, double t2_us) {
    const double t1_ns = t1_us * 1000.0;
    const double t2_ns = t2_us * 1000.0;
    const double p = 1.0 - std::exp(-duration_ns / t1_ns) * std::exp(-duration_ns / t2_ns);
    return std::clamp(p, 0.0, 1.0);
}

} // namespace

std::vector<NoiseParams> noise_from_calibration(const std::vector<CalibrationRecord> &records,
                                                double d1_ns, double d2_ns) {
    if (d1_ns < 0 || d2_ns < 0) {
        throw std::invalid_argument("gate durations must be non-negative");
    }
    std::vector<NoiseParams> params;
    params.reserve(records.size());
    for (const auto &rec : records) {
        NoiseParams p;
        p.p1 = decay_probability(d1_ns, rec.t1_us, rec.t2_us);
        p.p2 = decay_probability(d2_ns, rec.t1_us, rec.t2_us);
        p.readout_flip = 0.0;
        p.d1_ns = d1_ns;
        p.d2_ns = d2_ns;
        params.push_back(p);
    }
    return params;
}

namespace {

enum class Pauli : std::uint8_t { I, X, Y, Z };

constexpr double kPi = 3.1415926535897932384626433832795;

void apply_pauli(StateVector &state, QubitIndex q, Pauli pauli) {
    switch (pauli) {
    case Pauli::I:
        return;
    case Pauli::X:
        state.apply(GateOp::x(q));
        return;
    case Pauli::Z:
        state.apply(GateOp::p(kPi, q));
        return;
    case Pauli::Y:
        // X*Z = -iY; the global phase cannot reach the sampled probabilities
        state.apply(GateOp::p(kPi, q));
        state.apply(GateOp::x(q));
        return;
    }
}

using PairProbFn = std::function<double(const GateOp &)>;

ShotHistogram sample_noisy_impl(const Circuit &c, std::string_view initial, std::uint64_t shots,
                                std::uint64_t seed, const PairProbFn &gate_prob,
                                const std::function<double(QubitIndex)> &readout_prob) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (!c.has_measurements()) {
        throw std::invalid_argument("circuit has no measurements to sample");
    }
    const StateVector initial_state = StateVector::basis(c.num_qubits(), initial);

    ShotHistogram hist;
    hist.shots = shots;
    hist.seed = seed;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        ShotRng rng(seed, shot);
        StateVector state = initial_state;
        for (const auto &op : c.ops()) {
            if (op.kind == GateKind::Measure || op.kind == GateKind::Barrier) {
                continue;
            }
            state.apply(op);
            const double p = gate_prob(op);
            if (p <= 0.0) {
                continue;
            }
            if (rng.next_double() >= p) {
                continue;
            }
            if (op.arity() == 1) {
                const auto which = static_cast<Pauli>(1 + std::uint8_t(rng.next_double() * 3.0));
                apply_pauli(state, op.qubits[0], which);
            } else {
                const auto index = 1 + std::uint32_t(rng.next_double() * 15.0);
                apply_pauli(state, op.qubits[0], static_cast<Pauli>(index >> 2));
                apply_pauli(state, op.qubits[1], static_cast<Pauli>(index & 3));
            }
        }

        std::vector<double> cum(state.dim());
        double total = 0.0;
        for (std::size_t i = 0; i < state.dim(); ++i) {
            total += state.probability(i);
            cum[i] = total;
        }
        cum.back() = std::max(cum.back(), 1.0);
        const double u = rng.next_double();
        auto it = std::upper_bound(cum.begin(), cum.end(), u);
        if (it == cum.end()) {
            --it;
        }
        std::size_t outcome = static_cast<std::size_t>(it - cum.begin());

        std::string bits(c.num_clbits(), '0');
        for (const auto &op : c.ops()) {
            if (op.kind != GateKind::Measure) {
                continue;
            }
            bool value = (outcome >> op.qubits[0]) & 1;
            const double flip = readout_prob(op.qubits[0]);
            if (flip > 0.0 && rng.next_double() < flip) {
                value = !value;
            }
            bits[c.num_clbits() - 1 - op.clbit] = value ? '1' : '0';
        }
        ++hist.counts[bits];
    }
    return hist;
}

} // namespace

namespace {

void check_probabilities(const NoiseParams &noise) {
    for (double p : {noise.p1, noise.p2, noise.readout_flip}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("noise probabilities must lie in [0, 1]");
        }
    }
}

} // namespace

ShotHistogram sample_noisy(const Circuit &c, const NoiseParams &noise, std::string_view initial,
                           std::uint64_t shots, std::uint64_t seed) {
    check_probabilities(noise);
    if (noise.is_zero()) {
        return sample(c, initial, shots, seed);
    }
    return sample_noisy_impl(
        c, initial, shots, seed,
        [&](const GateOp &op) { return op.arity() == 2 ? noise.p2 : noise.p1; },
        [&](QubitIndex) { return noise.readout_flip; });
}

ShotHistogram sample_noisy(const Circuit &c, const std::vector<NoiseParams> &per_qubit,
                           std::string_view initial, std::uint64_t shots, std::uint64_t seed) {
    if (per_qubit.size() < c.num_qubits()) {
        throw std::invalid_argument("need one NoiseParams entry per circuit qubit");
    }
    bool all_zero = true;
    for (const auto &p : per_qubit) {
        check_probabilities(p);
        all_zero = all_zero && p.is_zero();
    }
    if (all_zero) {
        return sample(c, initial, shots, seed);
    }
    return sample_noisy_impl(
        c, initial, shots, seed,
        [&](const GateOp &op) {
            if (op.arity() == 2) {
                return std::max(per_qubit[op.qubits[0]].p2, per_qubit[op.qubits[1]].p2);
            }
            return per_qubit[op.qubits[0]].p1;
        },
        [&](QubitIndex q) { return per_qubit[q].readout_flip; });
}

} // namespace qfalu
