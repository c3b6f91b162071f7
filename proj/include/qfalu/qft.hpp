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

#include "qfalu/circuit.hpp"
#include "qfalu/matrix.hpp"

namespace qfalu {

struct QftParams {
    std::uint32_t n_qubits = 1;
    bool include_swaps = true;
};

/// n-qubit Fourier transform: per qubit j (most significant first) a
/// Hadamard followed by CP(pi/2^k) from each qubit k below it, then the
/// floor(n/2) order-reversing swaps when include_swaps is set. With swaps the
/// unitary matches dft_matrix(n); without them the output register is
/// bit-reversed (the in-place adders use that form and index accordingly).
Circuit build_qft(const QftParams &params);
Circuit build_qft(std::uint32_t n_qubits, bool include_swaps = true);

/// inverse(build_qft(params)).
Circuit build_iqft(const QftParams &params);
Circuit build_iqft(std::uint32_t n_qubits, bool include_swaps = true);

/// Discrete Fourier matrix with entry (y, x) = exp(2*pi*i*x*y/N)/sqrt(N),
/// N = 2^n. The oracle the circuit builder is tested against.
CMatrix dft_matrix(std::uint32_t n_qubits);
inline constexpr std::uint32_t kMaxDftQubits = 10;

} // namespace qfalu
