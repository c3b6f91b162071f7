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
#include <initializer_list>
#include <string>
#include <vector>

namespace qfalu {

using QubitIndex = std::uint32_t;
using ClbitIndex = std::uint32_t;

enum class GateKind : std::uint8_t {
    H,
    X,
    SX,
    SXDG,
    ID,
    RZ,
    P,
    CP,
    CX,
    SWAP,
    Measure,
    Barrier,
};

const char *to_string(GateKind kind);
/// Inverse of to_string; throws ParseError for unknown names.
GateKind gate_kind_from_string(const std::string &name);

bool is_two_qubit(GateKind kind);
bool has_angle(GateKind kind);

/// One circuit operation: a gate kind, up to two qubit operands, an angle for
/// the parametrized kinds, and a classical bit for measurements.
///
/// Angles are canonicalized into (-2*pi, 2*pi] at construction. The shift is
/// by multiples of 4*pi, which is exact for RZ (period 4*pi) and for P/CP
/// (period 2*pi), so canonicalization never changes the operator.
struct GateOp {
    GateKind kind = GateKind::ID;
    double angle = 0.0;
    QubitIndex qubits[2] = {0, 0};
    ClbitIndex clbit = 0;

    std::uint32_t arity() const { return is_two_qubit(kind) ? 2u : 1u; }

    static GateOp h(QubitIndex q);
    static GateOp x(QubitIndex q);
    static GateOp sx(QubitIndex q);
    static GateOp sxdg(QubitIndex q);
    static GateOp id(QubitIndex q);
    static GateOp rz(double angle, QubitIndex q);
    static GateOp p(double angle, QubitIndex q);
    static GateOp cp(double angle, QubitIndex a, QubitIndex b);
    static GateOp cx(QubitIndex control, QubitIndex target);
    static GateOp swap(QubitIndex a, QubitIndex b);
    static GateOp measure(QubitIndex q, ClbitIndex c);
    static GateOp barrier(QubitIndex q);

    bool operator==(const GateOp &other) const;
    bool operator!=(const GateOp &other) const { return !(*this == other); }
};

/// Reduce an angle into (-2*pi, 2*pi] by multiples of 4*pi.
double canonicalize_angle(double angle);

/// Ordered gate list over a fixed number of qubits and classical bits.
///
/// Append validates operand ranges and forbids gates after measurement
/// (measurements are terminal; only Measure/Barrier may follow a Measure).
/// Circuits are plain values: copying gives an independent history.
class Circuit {
  public:
    Circuit(std::uint32_t n_qubits, std::uint32_t n_clbits = 0, std::string name = "");

    std::uint32_t num_qubits() const { return n_qubits_; }
    std::uint32_t num_clbits() const { return n_clbits_; }
    const std::string &name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<GateOp> &ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }
    bool has_measurements() const { return n_measures_ > 0; }
    std::size_t num_measurements() const { return n_measures_; }

    void append(const GateOp &op);
    void extend(const std::vector<GateOp> &ops);
    /// Append every op of `other` (qubit/clbit counts must fit).
    void extend(const Circuit &other);

    /// Structural equality: qubit/clbit counts and op sequences match
    /// bit-exactly. The name label is not part of circuit structure.
    bool structurally_equal(const Circuit &other) const;

  private:
    std::uint32_t n_qubits_;
    std::uint32_t n_clbits_;
    std::string name_;
    std::vector<GateOp> ops_;
    std::size_t n_measures_ = 0;
};

/// Reversed op order with each gate replaced by its inverse (angles negated,
/// SX <-> SXDG). Throws NotInvertibleError if the circuit measures.
Circuit inverse(const Circuit &c);

/// Number of gate ops. Measure and Barrier are not counted.
std::size_t gate_count(const Circuit &c);
/// Number of ops whose kind appears in `kinds` (no implicit exclusions).
std::size_t gate_count(const Circuit &c, std::initializer_list<GateKind> kinds);
std::size_t gate_count(const Circuit &c, const std::vector<GateKind> &kinds);

} // namespace qfalu
