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

#include "qfalu/qft.hpp"

#include <cmath>
#include <stdexcept>

#include "qfalu/errors.hpp"

namespace qfalu {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

Circuit build_qft(const QftParams &params) {
    if (params.n_qubits == 0) {
        throw std::invalid_argument("QFT needs at least one qubit");
    }
    const std::uint32_t n = params.n_qubits;
    Circuit c(n, 0, "qft" + std::to_string(n));
    for (std::uint32_t j = n; j-- > 0;) {
        c.append(GateOp::h(j));
        for (std::uint32_t k = 1; k <= j; ++k) {
            c.append(GateOp::cp(kPi / double(1u << k), j - k, j));
        }
    }
    if (params.include_swaps) {
        for (std::uint32_t i = 0; i < n / 2; ++i) {
            c.append(GateOp::swap(i, n - 1 - i));
        }
    }
    return c;
}

Circuit build_qft(std::uint32_t n_qubits, bool include_swaps) {
    return build_qft(QftParams{n_qubits, include_swaps});
}

Circuit build_iqft(const QftParams &params) {
    Circuit c = inverse(build_qft(params));
    c.set_name("iqft" + std::to_string(params.n_qubits));
    return c;
}

Circuit build_iqft(std::uint32_t n_qubits, bool include_swaps) {
    return build_iqft(QftParams{n_qubits, include_swaps});
}

CMatrix dft_matrix(std::uint32_t n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("dft_matrix needs at least one qubit");
    }
    if (n_qubits > kMaxDftQubits) {
        throw ResourceLimitError("dft_matrix is limited to " + std::to_string(kMaxDftQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const double scale = 1.0 / std::sqrt(double(dim));
    CMatrix m(dim);
    for (std::size_t y = 0; y < dim; ++y) {
        for (std::size_t x = 0; x < dim; ++x) {
            // x*y mod N keeps the polar argument small
            const std::size_t xy = (x * y) & (dim - 1);
            m.at(y, x) = scale * std::polar(1.0, 2.0 * kPi * double(xy) / double(dim));
        }
    }
    return m;
}

} // namespace qfalu
