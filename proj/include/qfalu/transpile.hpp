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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qfalu/circuit.hpp"
#include "qfalu/matrix.hpp"

namespace qfalu {

/// Undirected connectivity graph of physical qubits.
struct CouplingMap {
    std::uint32_t n_physical = 0;
    std::set<std::pair<QubitIndex, QubitIndex>> edges; // stored with first < second

    void add_edge(QubitIndex a, QubitIndex b);
    bool has_edge(QubitIndex a, QubitIndex b) const;
    bool is_connected() const;

    std::string to_json() const;
    static CouplingMap from_json(const std::string &text);
    static CouplingMap load(const std::string &path);
};

/// 7-qubit heavy-hex-style fallback map used when none is supplied.
CouplingMap default_coupling_map();

/// logical qubit -> physical qubit, injective.
using Layout = std::vector<QubitIndex>;

/// Rewrite into the hardware basis {CX, ID, RZ, SX, X} (plus Measure and
/// Barrier), equal to the input up to global phase:
///   H    -> RZ(pi/2) SX RZ(pi/2)
///   P(t) -> RZ(t)
///   SXDG -> RZ(pi) SX RZ(pi)
///   SWAP -> CX CX CX
///   CP(t)-> RZ(t/2) on control, CX, RZ(-t/2) on target, CX, RZ(t/2) on target
Circuit decompose(const Circuit &c);

bool is_basis_gate(GateKind kind);

/// Result of routing onto a coupling map. The circuit acts on all
/// n_physical wires; layouts are full wire -> physical bijections where
/// wires >= n_logical are padding that starts (and stays) in |0>.
struct RoutedCircuit {
    Circuit circuit;
    std::vector<QubitIndex> initial_layout;
    std::vector<QubitIndex> final_layout;
    std::uint32_t n_logical = 0;

    /// Physical preparation string for a logical MSB-first bit string.
    std::string embed_initial_bits(std::string_view logical_bits) const;
};

/// Place a decomposed circuit onto the map: every CX must land on an edge;
/// a non-adjacent CX is preceded by swaps (emitted as 3-CX groups) that move
/// the control along a BFS shortest path toward the target, lower qubit
/// index winning ties. Measurements follow their logical qubit, so classical
/// bits stay correct.
RoutedCircuit route(const Circuit &c, const CouplingMap &map, const Layout &initial);

struct EquivalenceResult {
    bool equivalent = false;
    double max_deviation = 0.0;
};

/// True iff min over a global phase of the largest entrywise deviation
/// |U_a - e^{i phi} U_b| is at most tol. The phase is read off the
/// largest-magnitude entry pair. Measurements are stripped first.
EquivalenceResult verify_equivalence(const Circuit &a, const Circuit &b, double tol);
inline constexpr std::uint32_t kMaxEquivalenceQubits = 7;

/// Equivalence of a routed circuit against its source: compares the routed
/// unitary with P_final (U x I) P_initial^-1 up to global phase.
EquivalenceResult verify_routed_equivalence(const Circuit &original, const RoutedCircuit &routed,
                                            double tol);

/// Basis permutation of a wire -> physical bijection: bit w of the input
/// index becomes bit layout[w] of the output index.
CMatrix qubit_permutation_matrix(const std::vector<QubitIndex> &layout);

} // namespace qfalu
