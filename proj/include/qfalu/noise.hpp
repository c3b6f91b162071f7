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

#include <string_view>
#include <vector>

#include "qfalu/circuit.hpp"
#include "qfalu/statevector.hpp"

namespace qfalu {

/// One row of a device calibration table.
struct CalibrationRecord {
    std::uint32_t qubit = 0;
    double t1_us = 0.0;
    double t2_us = 0.0;
    double frequency_ghz = 0.0;
};

/// Parse a calibration table: a header line followed by one row per qubit,
/// cells comma- or whitespace-separated (columns qubit, T1 us, T2 us, GHz).
std::vector<CalibrationRecord> parse_calibration(std::string_view text);
std::vector<CalibrationRecord> load_calibration(const std::string &path);

/// Stochastic-Pauli noise strengths. p1/p2 are per-gate injection
/// probabilities for one- and two-qubit gates, readout_flip the
/// per-measured-bit classical flip probability. d1_ns/d2_ns are the gate
/// durations used only when deriving parameters from calibration data.
struct NoiseParams {
    double p1 = 0.0;
    double p2 = 0.0;
    double readout_flip = 0.0;
    double d1_ns = 35.0;
    double d2_ns = 300.0;

    bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && readout_flip == 0.0; }
};

inline constexpr double kDefaultD1Ns = 35.0;
inline constexpr double kDefaultD2Ns = 300.0;

/// Crude decoherence proxy, one entry per qubit in record order:
/// p = 1 - exp(-d/T1) * exp(-d/T2) with d = d1_ns for p1 and d2_ns for p2
/// (durations in ns, T1/T2 from the table in us). Readout flip is left 0;
/// the calibration table carries no readout data. A two-qubit gate uses the
/// worse of its two operands' p2 (see sample_noisy below).
std::vector<NoiseParams> noise_from_calibration(const std::vector<CalibrationRecord> &records,
                                                double d1_ns = kDefaultD1Ns, double d2_ns = kDefaultD2Ns);

/// Pauli-trajectory sampler: per shot the circuit is re-simulated and after
/// every gate a uniformly random non-identity Pauli is injected on the gate's
/// operand(s) with probability p1 (one-qubit) or p2 (two-qubit); measured
/// bits then flip with probability readout_flip. With all-zero NoiseParams
/// this consumes exactly the same random stream as sample() and returns a
/// bit-identical histogram for the same seed.
ShotHistogram sample_noisy(const Circuit &c, const NoiseParams &noise, std::string_view initial,
                           std::uint64_t shots, std::uint64_t seed);

/// Per-qubit variant: gate injection uses the operand qubit's entry; a
/// two-qubit gate takes the larger p2 of its operands.
ShotHistogram sample_noisy(const Circuit &c, const std::vector<NoiseParams> &per_qubit,
                           std::string_view initial, std::uint64_t shots, std::uint64_t seed);

} // namespace qfalu
