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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qfalu/circuit.hpp"
#include "qfalu/matrix.hpp"

namespace qfalu {

/// Dense n-qubit pure state. Basis index b encodes qubit i at bit i, so
/// qubit 0 is the least-significant bit of b.
class StateVector {
  public:
    /// |0...0>
    explicit StateVector(std::uint32_t n_qubits);

    /// Computational-basis state from an MSB-first bit string: bits[0] is
    /// qubit n-1, bits[n-1] is qubit 0 ("10" on two qubits puts q1 = 1).
    static StateVector basis(std::uint32_t n_qubits, std::string_view bits);

    std::uint32_t num_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex amplitude(std::size_t basis_index) const { return amps_[basis_index]; }
    double probability(std::size_t basis_index) const { return std::norm(amps_[basis_index]); }

    /// Sum of |amplitude|^2 (1 up to rounding for any valid state).
    double norm() const;

    /// Apply one gate in place. Measure is rejected; Barrier and ID are
    /// no-ops on the amplitudes.
    void apply(const GateOp &op);

  private:
    std::uint32_t n_qubits_;
    std::vector<Complex> amps_;
};

/// Measurement record of a sampling run. Keys render the classical register
/// most-significant bit first ("c1c0" for a 2-bit register).
struct ShotHistogram {
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t seed = 0;
};

/// Final pre-measurement state of `c` applied to the given basis input.
/// Measure ops are skipped.
StateVector run(const Circuit &c, std::string_view initial);

/// Full 2^n x 2^n unitary, column j = c applied to basis state j.
/// Guarded to n <= 10 qubits; rejects circuits that measure.
CMatrix unitary_of(const Circuit &c);
inline constexpr std::uint32_t kMaxUnitaryQubits = 10;

/// Draw `shots` outcomes from the final state's distribution and map the
/// measured qubits through the circuit's Measure ops onto classical bits.
/// Deterministic in (c, initial, shots, seed); see rng.hpp for the contract.
ShotHistogram sample(const Circuit &c, std::string_view initial, std::uint64_t shots, std::uint64_t seed);

/// Classical register string for one basis outcome (MSB-first).
std::string classical_bits_for_outcome(const Circuit &c, std::size_t outcome);

/// Histogram as a JSON object string mapping bit-string -> count.
std::string histogram_to_json(const ShotHistogram &h);
/// Histogram as an ASCII bar chart, one outcome per line.
std::string histogram_to_chart(const ShotHistogram &h, std::size_t width = 40);

} // namespace qfalu
