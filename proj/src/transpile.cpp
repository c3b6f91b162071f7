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

#include "qfalu/transpile.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qfalu/errors.hpp"
#include "qfalu/statevector.hpp"

namespace qfalu {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

void CouplingMap::add_edge(QubitIndex a, QubitIndex b) {
    if (a == b) {
        throw std::invalid_argument("self-edges are not allowed");
    }
    edges.insert({std::min(a, b), std::max(a, b)});
}

bool CouplingMap::has_edge(QubitIndex a, QubitIndex b) const {
    return edges.count({std::min(a, b), std::max(a, b)}) > 0;
}

bool CouplingMap::is_connected() const {
    if (n_physical == 0) {
        return false;
    }
    std::vector<std::vector<QubitIndex>> adj(n_physical);
    for (const auto &[a, b] : edges) {
        if (a >= n_physical || b >= n_physical) {
            return false;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(n_physical, false);
    std::deque<QubitIndex> queue{0};
    seen[0] = true;
    std::uint32_t reached = 1;
    while (!queue.empty()) {
        const QubitIndex cur = queue.front();
        queue.pop_front();
        for (QubitIndex next : adj[cur]) {
            if (!seen[next]) {
                seen[next] = true;
                ++reached;
                queue.push_back(next);
            }
        }
    }
    return reached == n_physical;
}

std::string CouplingMap::to_json() const {
    nlohmann::json j;
    j["n_physical"] = n_physical;
    auto arr = nlohmann::json::array();
    for (const auto &[a, b] : edges) {
        arr.push_back({a, b});
    }
    j["edges"] = arr;
    return j.dump(2);
}

CouplingMap CouplingMap::from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("coupling map JSON: ") + e.what());
    }
    if (!j.contains("n_physical") || !j.contains("edges")) {
        throw ParseError("coupling map JSON needs 'n_physical' and 'edges'");
    }
    CouplingMap map;
    map.n_physical = j.at("n_physical").get<std::uint32_t>();
    for (const auto &edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2) {
            throw ParseError("each edge must be a pair of qubit indices");
        }
        const auto a = edge[0].get<std::uint32_t>();
        const auto b = edge[1].get<std::uint32_t>();
        if (a >= map.n_physical || b >= map.n_physical) {
            throw ParseError("edge endpoint out of range");
        }
        map.add_edge(a, b);
    }
    return map;
}

CouplingMap CouplingMap::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open coupling map '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

CouplingMap default_coupling_map() {
    CouplingMap map;
    map.n_physical = 7;
    map.add_edge(0, 1);
    map.add_edge(1, 2);
    map.add_edge(1, 3);
    map.add_edge(3, 5);
    map.add_edge(4, 5);
    map.add_edge(5, 6);
    return map;
}

bool is_basis_gate(GateKind kind) {
    switch (kind) {
    case GateKind::CX:
    case GateKind::ID:
    case GateKind::RZ:
    case GateKind::SX:
    case GateKind::X:
        return true;
    default:
        return false;
    }
}

Circuit decompose(const Circuit &c) {
    Circuit out(c.num_qubits(), c.num_clbits(), c.name());
    for (const auto &op : c.ops()) {
        switch (op.kind) {
        case GateKind::CX:
        case GateKind::ID:
        case GateKind::RZ:
        case GateKind::SX:
        case GateKind::X:
        case GateKind::Measure:
        case GateKind::Barrier:
            out.append(op);
            break;
        case GateKind::H:
            out.append(GateOp::rz(kPi / 2, op.qubits[0]));
            out.append(GateOp::sx(op.qubits[0]));
            out.append(GateOp::rz(kPi / 2, op.qubits[0]));
            break;
        case GateKind::P:
            out.append(GateOp::rz(op.angle, op.qubits[0]));
            break;
        case GateKind::SXDG:
            out.append(GateOp::rz(kPi, op.qubits[0]));
            out.append(GateOp::sx(op.qubits[0]));
            out.append(GateOp::rz(kPi, op.qubits[0]));
            break;
        case GateKind::SWAP:
            out.append(GateOp::cx(op.qubits[0], op.qubits[1]));
            out.append(GateOp::cx(op.qubits[1], op.qubits[0]));
            out.append(GateOp::cx(op.qubits[0], op.qubits[1]));
            break;
        case GateKind::CP:
            out.append(GateOp::rz(op.angle / 2, op.qubits[0]));
            out.append(GateOp::cx(op.qubits[0], op.qubits[1]));
            out.append(GateOp::rz(-op.angle / 2, op.qubits[1]));
            out.append(GateOp::cx(op.qubits[0], op.qubits[1]));
            out.append(GateOp::rz(op.angle / 2, op.qubits[1]));
            break;
        default:
            throw UnsupportedGateError(std::string("no rewrite rule for gate '") + to_string(op.kind) + "'");
        }
    }
    return out;
}

namespace {

std::vector<std::vector<QubitIndex>> sorted_adjacency(const CouplingMap &map) {
    std::vector<std::vector<QubitIndex>> adj(map.n_physical);
    for (const auto &[a, b] : map.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto &row : adj) {
        std::sort(row.begin(), row.end());
    }
    return adj;
}

/// BFS shortest path from `from` to `to`; ascending neighbor order makes the
/// lowest-index path win ties.
std::vector<QubitIndex> shortest_path(const std::vector<std::vector<QubitIndex>> &adj, QubitIndex from,
                                      QubitIndex to) {
    const auto n = static_cast<std::uint32_t>(adj.size());
    std::vector<std::int64_t> parent(n, -1);
    std::deque<QubitIndex> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        const QubitIndex cur = queue.front();
        queue.pop_front();
        if (cur == to) {
            break;
        }
        for (QubitIndex next : adj[cur]) {
            if (parent[next] < 0) {
                parent[next] = cur;
                queue.push_back(next);
            }
        }
    }
    std::vector<QubitIndex> path;
    for (QubitIndex cur = to;; cur = static_cast<QubitIndex>(parent[cur])) {
        path.push_back(cur);
        if (cur == from) {
            break;
        }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

RoutedCircuit route(const Circuit &c, const CouplingMap &map, const Layout &initial) {
    if (!map.is_connected()) {
        throw std::invalid_argument("coupling map must be connected");
    }
    for (const auto &op : c.ops()) {
        if (op.kind != GateKind::Measure && op.kind != GateKind::Barrier && !is_basis_gate(op.kind)) {
            throw std::invalid_argument(std::string("route expects a decomposed circuit; found '") +
                                        to_string(op.kind) + "'");
        }
    }
    if (initial.size() != c.num_qubits()) {
        throw std::invalid_argument("layout must cover every logical qubit");
    }
    if (c.num_qubits() > map.n_physical) {
        throw std::invalid_argument("circuit has more qubits than the coupling map");
    }

    std::vector<bool> used(map.n_physical, false);
    for (QubitIndex phys : initial) {
        if (phys >= map.n_physical) {
            throw std::invalid_argument("layout target " + std::to_string(phys) + " out of range");
        }
        if (used[phys]) {
            throw std::invalid_argument("layout collision on physical qubit " + std::to_string(phys));
        }
        used[phys] = true;
    }

    // Extend to a full wire <-> physical bijection; spare physical qubits
    // host padding wires in ascending order.
    std::vector<QubitIndex> wire_to_phys = initial;
    for (QubitIndex phys = 0; phys < map.n_physical; ++phys) {
        if (!used[phys]) {
            wire_to_phys.push_back(phys);
        }
    }
    std::vector<QubitIndex> phys_to_wire(map.n_physical);
    for (QubitIndex wire = 0; wire < map.n_physical; ++wire) {
        phys_to_wire[wire_to_phys[wire]] = wire;
    }

    const auto adj = sorted_adjacency(map);
    RoutedCircuit routed{Circuit(map.n_physical, c.num_clbits(),
                                 c.name().empty() ? "routed" : c.name() + "_routed"),
                         wire_to_phys,
                         {},
                         c.num_qubits()};
    Circuit &out = routed.circuit;

    const auto emit_swap = [&](QubitIndex pa, QubitIndex pb) {
        out.append(GateOp::cx(pa, pb));
        out.append(GateOp::cx(pb, pa));
        out.append(GateOp::cx(pa, pb));
        std::swap(phys_to_wire[pa], phys_to_wire[pb]);
        wire_to_phys[phys_to_wire[pa]] = pa;
        wire_to_phys[phys_to_wire[pb]] = pb;
    };

    for (const auto &op : c.ops()) {
        if (op.kind == GateKind::CX) {
            QubitIndex pc = wire_to_phys[op.qubits[0]];
            const QubitIndex pt = wire_to_phys[op.qubits[1]];
            if (!map.has_edge(pc, pt)) {
                const auto path = shortest_path(adj, pc, pt);
                for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                    emit_swap(pc, path[i]);
                    pc = path[i];
                }
            }
            out.append(GateOp::cx(pc, pt));
        } else if (op.kind == GateKind::Measure) {
            out.append(GateOp::measure(wire_to_phys[op.qubits[0]], op.clbit));
        } else {
            GateOp mapped = op;
            mapped.qubits[0] = wire_to_phys[op.qubits[0]];
            mapped.qubits[1] = mapped.qubits[0];
            out.append(mapped);
        }
    }
    routed.final_layout = wire_to_phys;
    return routed;
}

std::string RoutedCircuit::embed_initial_bits(std::string_view logical_bits) const {
    if (logical_bits.size() != n_logical) {
        throw std::invalid_argument("logical bit string length mismatch");
    }
    const auto n_physical = static_cast<std::uint32_t>(initial_layout.size());
    std::string bits(n_physical, '0');
    for (std::uint32_t wire = 0; wire < n_logical; ++wire) {
        const char value = logical_bits[n_logical - 1 - wire];
        bits[n_physical - 1 - initial_layout[wire]] = value;
    }
    return bits;
}

CMatrix qubit_permutation_matrix(const std::vector<QubitIndex> &layout) {
    const auto n = static_cast<std::uint32_t>(layout.size());
    const std::size_t dim = std::size_t{1} << n;
    CMatrix perm(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        std::size_t y = 0;
        for (std::uint32_t wire = 0; wire < n; ++wire) {
            if (x & (std::size_t{1} << wire)) {
                y |= std::size_t{1} << layout[wire];
            }
        }
        perm.at(y, x) = 1.0;
    }
    return perm;
}

namespace {

Circuit strip_non_unitary(const Circuit &c) {
    Circuit out(c.num_qubits(), 0, c.name());
    for (const auto &op : c.ops()) {
        if (op.kind == GateKind::Measure || op.kind == GateKind::Barrier) {
            continue;
        }
        out.append(op);
    }
    return out;
}

EquivalenceResult phase_aligned_comparison(const CMatrix &a, const CMatrix &b, double tol) {
    double best_weight = -1.0;
    Complex ref_a, ref_b;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            const double weight = std::abs(a.at(r, c)) + std::abs(b.at(r, c));
            if (weight > best_weight) {
                best_weight = weight;
                ref_a = a.at(r, c);
                ref_b = b.at(r, c);
            }
        }
    }
    Complex phase{1.0, 0.0};
    if (std::abs(ref_a) > 0.0 && std::abs(ref_b) > 0.0) {
        const Complex ratio = ref_a / ref_b;
        phase = ratio / std::abs(ratio);
    }
    double deviation = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            deviation = std::max(deviation, std::abs(a.at(r, c) - phase * b.at(r, c)));
        }
    }
    return {deviation <= tol, deviation};
}

} // namespace

EquivalenceResult verify_equivalence(const Circuit &a, const Circuit &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("circuits act on different qubit counts");
    }
    if (a.num_qubits() > kMaxEquivalenceQubits) {
        throw ResourceLimitError("equivalence check is limited to " +
                                 std::to_string(kMaxEquivalenceQubits) + " qubits");
    }
    const CMatrix ua = unitary_of(strip_non_unitary(a));
    const CMatrix ub = unitary_of(strip_non_unitary(b));
    return phase_aligned_comparison(ua, ub, tol);
}

EquivalenceResult verify_routed_equivalence(const Circuit &original, const RoutedCircuit &routed,
                                            double tol) {
    const auto n_physical = routed.circuit.num_qubits();
    if (n_physical > kMaxEquivalenceQubits) {
        throw ResourceLimitError("equivalence check is limited to " +
                                 std::to_string(kMaxEquivalenceQubits) + " qubits");
    }
    Circuit embedded(n_physical, 0, original.name());
    for (const auto &op : original.ops()) {
        if (op.kind == GateKind::Measure || op.kind == GateKind::Barrier) {
            continue;
        }
        embedded.append(op);
    }
    const CMatrix u_routed = unitary_of(strip_non_unitary(routed.circuit));
    const CMatrix expected = qubit_permutation_matrix(routed.final_layout) * unitary_of(embedded) *
                             qubit_permutation_matrix(routed.initial_layout).adjoint();
    return phase_aligned_comparison(u_routed, expected, tol);
}

} // namespace qfalu
