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

#include "qfalu/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qfalu/errors.hpp"
#include "qfalu/rng.hpp"

namespace qfalu {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

std::size_t basis_index_from_bits(std::uint32_t n_qubits, std::string_view bits) {
    if (bits.size() != n_qubits) {
        throw std::invalid_argument("bit string length " + std::to_string(bits.size()) +
                                    " does not match qubit count " + std::to_string(n_qubits));
    }
    std::size_t index = 0;
    for (std::uint32_t pos = 0; pos < n_qubits; ++pos) {
        const char ch = bits[pos];
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        }
        if (ch == '1') {
            index |= std::size_t{1} << (n_qubits - 1 - pos);
        }
    }
    return index;
}

} // namespace

StateVector::StateVector(std::uint32_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(std::uint32_t n_qubits, std::string_view bits) {
    StateVector state(n_qubits);
    const std::size_t index = basis_index_from_bits(n_qubits, bits);
    state.amps_[0] = 0.0;
    state.amps_[index] = 1.0;
    return state;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

namespace {

/// 2x2 unitary on target qubit t: the usual pair-stride walk over the
/// (i, i | 1<<t) amplitude pairs.
void apply_matrix_1q(std::vector<Complex> &amps, QubitIndex t, const Complex m[2][2]) {
    const std::size_t mask = std::size_t{1} << t;
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::size_t half = amps.size() >> 1;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
        const std::size_t i1 = i0 | mask;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = m[0][0] * a0 + m[0][1] * a1;
        amps[i1] = m[1][0] * a0 + m[1][1] * a1;
    }
}

void apply_phase_on_ones(std::vector<Complex> &amps, QubitIndex t, Complex phase) {
    const std::size_t mask = std::size_t{1} << t;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            amps[i] *= phase;
        }
    }
}

} // namespace

void StateVector::apply(const GateOp &op) {
    for (std::uint32_t i = 0; i < op.arity(); ++i) {
        if (op.qubits[i] >= n_qubits_) {
            throw std::invalid_argument("gate operand out of range");
        }
    }
    switch (op.kind) {
    case GateKind::ID:
    case GateKind::Barrier:
        return;
    case GateKind::Measure:
        throw std::invalid_argument("measurement is handled by sample(), not apply()");
    case GateKind::H: {
        const Complex m[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
        apply_matrix_1q(amps_, op.qubits[0], m);
        return;
    }
    case GateKind::X: {
        const std::size_t mask = std::size_t{1} << op.qubits[0];
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (!(i & mask)) {
                std::swap(amps_[i], amps_[i | mask]);
            }
        }
        return;
    }
    case GateKind::SX: {
        const Complex a{0.5, 0.5}, b{0.5, -0.5};
        const Complex m[2][2] = {{a, b}, {b, a}};
        apply_matrix_1q(amps_, op.qubits[0], m);
        return;
    }
    case GateKind::SXDG: {
        const Complex a{0.5, -0.5}, b{0.5, 0.5};
        const Complex m[2][2] = {{a, b}, {b, a}};
        apply_matrix_1q(amps_, op.qubits[0], m);
        return;
    }
    case GateKind::RZ: {
        const Complex lo = std::polar(1.0, -op.angle / 2.0);
        const Complex hi = std::polar(1.0, op.angle / 2.0);
        const std::size_t mask = std::size_t{1} << op.qubits[0];
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            amps_[i] *= (i & mask) ? hi : lo;
        }
        return;
    }
    case GateKind::P:
        apply_phase_on_ones(amps_, op.qubits[0], std::polar(1.0, op.angle));
        return;
    case GateKind::CP: {
        const std::size_t both = (std::size_t{1} << op.qubits[0]) | (std::size_t{1} << op.qubits[1]);
        const Complex phase = std::polar(1.0, op.angle);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & both) == both) {
                amps_[i] *= phase;
            }
        }
        return;
    }
    case GateKind::CX: {
        const std::size_t cmask = std::size_t{1} << op.qubits[0];
        const std::size_t tmask = std::size_t{1} << op.qubits[1];
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & cmask) && !(i & tmask)) {
                std::swap(amps_[i], amps_[i | tmask]);
            }
        }
        return;
    }
    case GateKind::SWAP: {
        const std::size_t amask = std::size_t{1} << op.qubits[0];
        const std::size_t bmask = std::size_t{1} << op.qubits[1];
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & amask) && !(i & bmask)) {
                std::swap(amps_[i], amps_[i ^ amask ^ bmask]);
            }
        }
        return;
    }
    }
    throw UnsupportedGateError("unhandled gate kind");
}

StateVector run(const Circuit &c, std::string_view initial) {
    StateVector state = StateVector::basis(c.num_qubits(), initial);
    for (const auto &op : c.ops()) {
        if (op.kind == GateKind::Measure) {
            continue;
        }
        state.apply(op);
    }
    return state;
}

CMatrix unitary_of(const Circuit &c) {
    if (c.has_measurements()) {
        throw std::invalid_argument("unitary_of needs a measurement-free circuit");
    }
    if (c.num_qubits() > kMaxUnitaryQubits) {
        throw ResourceLimitError("unitary_of is limited to " + std::to_string(kMaxUnitaryQubits) +
                                 " qubits, got " + std::to_string(c.num_qubits()));
    }
    const std::size_t dim = std::size_t{1} << c.num_qubits();
    CMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::string bits(c.num_qubits(), '0');
        for (std::uint32_t q = 0; q < c.num_qubits(); ++q) {
            if (col & (std::size_t{1} << q)) {
                bits[c.num_qubits() - 1 - q] = '1';
            }
        }
        const StateVector state = run(c, bits);
        for (std::size_t row = 0; row < dim; ++row) {
            u.at(row, col) = state.amplitude(row);
        }
    }
    return u;
}

std::string classical_bits_for_outcome(const Circuit &c, std::size_t outcome) {
    std::string bits(c.num_clbits(), '0');
    for (const auto &op : c.ops()) {
        if (op.kind != GateKind::Measure) {
            continue;
        }
        const bool value = (outcome >> op.qubits[0]) & 1;
        bits[c.num_clbits() - 1 - op.clbit] = value ? '1' : '0';
    }
    return bits;
}

namespace {

std::vector<double> cumulative_probabilities(const StateVector &state) {
    std::vector<double> cum(state.dim());
    double total = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        total += state.probability(i);
        cum[i] = total;
    }
    cum.back() = std::max(cum.back(), 1.0);
    return cum;
}

std::size_t draw_outcome(const std::vector<double> &cum, double u) {
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) {
        --it;
    }
    return static_cast<std::size_t>(it - cum.begin());
}

} // namespace

ShotHistogram sample(const Circuit &c, std::string_view initial, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (!c.has_measurements()) {
        throw std::invalid_argument("circuit has no measurements to sample");
    }
    const StateVector state = run(c, initial);
    const std::vector<double> cum = cumulative_probabilities(state);

    ShotHistogram hist;
    hist.shots = shots;
    hist.seed = seed;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        ShotRng rng(seed, shot);
        const std::size_t outcome = draw_outcome(cum, rng.next_double());
        ++hist.counts[classical_bits_for_outcome(c, outcome)];
    }
    return hist;
}

std::string histogram_to_json(const ShotHistogram &h) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto &[bits, count] : h.counts) {
        out << (first ? "" : ", ") << '"' << bits << "\": " << count;
        first = false;
    }
    out << "}";
    return out.str();
}

std::string histogram_to_chart(const ShotHistogram &h, std::size_t width) {
    std::uint64_t max_count = 1;
    for (const auto &[bits, count] : h.counts) {
        max_count = std::max(max_count, count);
    }
    std::ostringstream out;
    for (const auto &[bits, count] : h.counts) {
        const std::size_t bar = (count * width + max_count - 1) / max_count;
        out << bits << ' ';
        for (std::size_t i = 0; i < bar; ++i) {
            out << '#';
        }
        out << ' ' << count << "\n";
    }
    return out.str();
}

} // namespace qfalu
