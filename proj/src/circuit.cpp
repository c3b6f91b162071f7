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

#include "qfalu/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qfalu/errors.hpp"

namespace qfalu {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct KindInfo {
    GateKind kind;
    const char *name;
    bool two_qubit;
    bool angled;
};

constexpr KindInfo kKindTable[] = {
    {GateKind::H, "h", false, false},        {GateKind::X, "x", false, false},
    {GateKind::SX, "sx", false, false},      {GateKind::SXDG, "sxdg", false, false},
    {GateKind::ID, "id", false, false},      {GateKind::RZ, "rz", false, true},
    {GateKind::P, "p", false, true},         {GateKind::CP, "cp", true, true},
    {GateKind::CX, "cx", true, false},       {GateKind::SWAP, "swap", true, false},
    {GateKind::Measure, "measure", false, false}, {GateKind::Barrier, "barrier", false, false},
};

const KindInfo &info(GateKind kind) { return kKindTable[static_cast<std::size_t>(kind)]; }

} // namespace

const char *to_string(GateKind kind) { return info(kind).name; }

GateKind gate_kind_from_string(const std::string &name) {
    for (const auto &entry : kKindTable) {
        if (name == entry.name) {
            return entry.kind;
        }
    }
    throw ParseError("unknown gate kind '" + name + "'");
}

bool is_two_qubit(GateKind kind) { return info(kind).two_qubit; }
bool has_angle(GateKind kind) { return info(kind).angled; }

double canonicalize_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    double reduced = std::fmod(angle, 2.0 * kTwoPi);
    if (reduced > kTwoPi) {
        reduced -= 2.0 * kTwoPi;
    } else if (reduced <= -kTwoPi) {
        reduced += 2.0 * kTwoPi;
    }
    return reduced;
}

namespace {

GateOp make_1q(GateKind kind, QubitIndex q) {
    GateOp op;
    op.kind = kind;
    op.qubits[0] = q;
    op.qubits[1] = q;
    return op;
}

GateOp make_2q(GateKind kind, QubitIndex a, QubitIndex b) {
    if (a == b) {
        throw std::invalid_argument(std::string(to_string(kind)) + " operands must be distinct qubits");
    }
    GateOp op;
    op.kind = kind;
    op.qubits[0] = a;
    op.qubits[1] = b;
    return op;
}

} // namespace

GateOp GateOp::h(QubitIndex q) { return make_1q(GateKind::H, q); }
GateOp GateOp::x(QubitIndex q) { return make_1q(GateKind::X, q); }
GateOp GateOp::sx(QubitIndex q) { return make_1q(GateKind::SX, q); }
GateOp GateOp::sxdg(QubitIndex q) { return make_1q(GateKind::SXDG, q); }
GateOp GateOp::id(QubitIndex q) { return make_1q(GateKind::ID, q); }

GateOp GateOp::rz(double angle, QubitIndex q) {
    GateOp op = make_1q(GateKind::RZ, q);
    op.angle = canonicalize_angle(angle);
    return op;
}

GateOp GateOp::p(double angle, QubitIndex q) {
    GateOp op = make_1q(GateKind::P, q);
    op.angle = canonicalize_angle(angle);
    return op;
}

GateOp GateOp::cp(double angle, QubitIndex a, QubitIndex b) {
    GateOp op = make_2q(GateKind::CP, a, b);
    op.angle = canonicalize_angle(angle);
    return op;
}

GateOp GateOp::cx(QubitIndex control, QubitIndex target) { return make_2q(GateKind::CX, control, target); }
GateOp GateOp::swap(QubitIndex a, QubitIndex b) { return make_2q(GateKind::SWAP, a, b); }

GateOp GateOp::measure(QubitIndex q, ClbitIndex c) {
    GateOp op = make_1q(GateKind::Measure, q);
    op.clbit = c;
    return op;
}

GateOp GateOp::barrier(QubitIndex q) { return make_1q(GateKind::Barrier, q); }

bool GateOp::operator==(const GateOp &other) const {
    if (kind != other.kind || qubits[0] != other.qubits[0]) {
        return false;
    }
    if (arity() == 2 && qubits[1] != other.qubits[1]) {
        return false;
    }
    if (has_angle(kind) && angle != other.angle) {
        return false;
    }
    if (kind == GateKind::Measure && clbit != other.clbit) {
        return false;
    }
    return true;
}

Circuit::Circuit(std::uint32_t n_qubits, std::uint32_t n_clbits, std::string name)
    : n_qubits_(n_qubits), n_clbits_(n_clbits), name_(std::move(name)) {
    if (n_qubits == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

void Circuit::append(const GateOp &op) {
    for (std::uint32_t i = 0; i < op.arity(); ++i) {
        if (op.qubits[i] >= n_qubits_) {
            throw std::invalid_argument("qubit index " + std::to_string(op.qubits[i]) +
                                        " out of range for " + std::to_string(n_qubits_) + "-qubit circuit");
        }
    }
    if (op.arity() == 2 && op.qubits[0] == op.qubits[1]) {
        throw std::invalid_argument("two-qubit gate operands must be distinct");
    }
    if (has_angle(op.kind) && !std::isfinite(op.angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    if (op.kind == GateKind::Measure) {
        if (op.clbit >= n_clbits_) {
            throw std::invalid_argument("classical bit index " + std::to_string(op.clbit) +
                                        " out of range for " + std::to_string(n_clbits_) + " classical bits");
        }
    } else if (op.kind != GateKind::Barrier && n_measures_ > 0) {
        throw OrderingError("gate after measurement: measurements are terminal");
    }
    ops_.push_back(op);
    if (op.kind == GateKind::Measure) {
        ++n_measures_;
    }
}

void Circuit::extend(const std::vector<GateOp> &ops) {
    for (const auto &op : ops) {
        append(op);
    }
}

void Circuit::extend(const Circuit &other) {
    if (other.num_qubits() > n_qubits_ || other.num_clbits() > n_clbits_) {
        throw std::invalid_argument("extended circuit does not fit");
    }
    extend(other.ops());
}

bool Circuit::structurally_equal(const Circuit &other) const {
    return n_qubits_ == other.n_qubits_ && n_clbits_ == other.n_clbits_ && ops_ == other.ops_;
}

Circuit inverse(const Circuit &c) {
    if (c.has_measurements()) {
        throw NotInvertibleError("cannot invert a circuit containing measurements");
    }
    Circuit out(c.num_qubits(), c.num_clbits(), c.name().empty() ? "" : c.name() + "_inv");
    const auto &ops = c.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        GateOp op = *it;
        switch (op.kind) {
        case GateKind::RZ:
        case GateKind::P:
        case GateKind::CP:
            op.angle = canonicalize_angle(-op.angle);
            break;
        case GateKind::SX:
            op.kind = GateKind::SXDG;
            break;
        case GateKind::SXDG:
            op.kind = GateKind::SX;
            break;
        default:
            break;
        }
        out.append(op);
    }
    return out;
}

std::size_t gate_count(const Circuit &c) {
    return static_cast<std::size_t>(
        std::count_if(c.ops().begin(), c.ops().end(), [](const GateOp &op) {
            return op.kind != GateKind::Measure && op.kind != GateKind::Barrier;
        }));
}

std::size_t gate_count(const Circuit &c, const std::vector<GateKind> &kinds) {
    return static_cast<std::size_t>(
        std::count_if(c.ops().begin(), c.ops().end(), [&](const GateOp &op) {
            return std::find(kinds.begin(), kinds.end(), op.kind) != kinds.end();
        }));
}

std::size_t gate_count(const Circuit &c, std::initializer_list<GateKind> kinds) {
    return gate_count(c, std::vector<GateKind>(kinds));
}

} // namespace qfalu
