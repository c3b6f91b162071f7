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

#include "qfalu/circuit_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "qfalu/errors.hpp"

namespace qfalu {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void serialize(const Circuit &c, std::ostream &out) {
    out << "qubits " << c.num_qubits() << "\n";
    out << "clbits " << c.num_clbits() << "\n";
    for (const auto &op : c.ops()) {
        out << to_string(op.kind);
        if (has_angle(op.kind)) {
            out << ' ' << format_double(op.angle);
        }
        out << " q" << op.qubits[0];
        if (op.arity() == 2) {
            out << " q" << op.qubits[1];
        }
        if (op.kind == GateKind::Measure) {
            out << " -> c" << op.clbit;
        }
        out << "\n";
    }
}

std::string serialize(const Circuit &c) {
    std::ostringstream out;
    serialize(c, out);
    return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string &line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            break;
        }
        tokens.push_back(tok);
    }
    return tokens;
}

std::uint32_t parse_index(const std::string &tok, char prefix, std::size_t line_no) {
    if (tok.size() < 2 || tok[0] != prefix) {
        throw ParseError("expected " + std::string(1, prefix) + "<index>, got '" + tok + "'", line_no);
    }
    std::uint32_t value = 0;
    auto res = std::from_chars(tok.data() + 1, tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
        throw ParseError("bad index in '" + tok + "'", line_no);
    }
    return value;
}

std::uint32_t parse_count(const std::string &tok, std::size_t line_no) {
    std::uint32_t value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
        throw ParseError("expected a count, got '" + tok + "'", line_no);
    }
    return value;
}

double parse_angle(const std::string &tok, std::size_t line_no) {
    double value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
        throw ParseError("bad angle '" + tok + "'", line_no);
    }
    return value;
}

} // namespace

Circuit parse_circuit_stream(std::istream &in, const std::string &name) {
    std::optional<std::uint32_t> n_qubits;
    std::uint32_t n_clbits = 0;
    std::optional<Circuit> circuit;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string &head = tokens[0];
        if (head == "qubits" || head == "clbits") {
            if (circuit.has_value()) {
                throw ParseError("header '" + head + "' after ops", line_no);
            }
            if (tokens.size() != 2) {
                throw ParseError("'" + head + "' takes one count", line_no);
            }
            if (head == "qubits") {
                n_qubits = parse_count(tokens[1], line_no);
            } else {
                n_clbits = parse_count(tokens[1], line_no);
            }
            continue;
        }
        if (!n_qubits.has_value()) {
            throw ParseError("op before 'qubits <n>' header", line_no);
        }
        if (!circuit.has_value()) {
            try {
                circuit.emplace(*n_qubits, n_clbits, name);
            } catch (const std::exception &e) {
                throw ParseError(e.what(), line_no);
            }
        }

        GateKind kind = gate_kind_from_string(head);
        std::size_t pos = 1;
        double angle = 0.0;
        if (has_angle(kind)) {
            if (tokens.size() <= pos) {
                throw ParseError(head + " needs an angle", line_no);
            }
            angle = parse_angle(tokens[pos++], line_no);
        }
        std::uint32_t arity = is_two_qubit(kind) ? 2u : 1u;
        QubitIndex qubits[2] = {0, 0};
        for (std::uint32_t i = 0; i < arity; ++i) {
            if (tokens.size() <= pos) {
                throw ParseError(head + " needs " + std::to_string(arity) + " qubit operand(s)", line_no);
            }
            qubits[i] = parse_index(tokens[pos++], 'q', line_no);
        }
        ClbitIndex clbit = 0;
        if (kind == GateKind::Measure) {
            if (tokens.size() != pos + 2 || tokens[pos] != "->") {
                throw ParseError("measure syntax is: measure q<i> -> c<k>", line_no);
            }
            clbit = parse_index(tokens[pos + 1], 'c', line_no);
            pos += 2;
        }
        if (tokens.size() != pos) {
            throw ParseError("trailing tokens after op", line_no);
        }

        try {
            GateOp op;
            switch (kind) {
            case GateKind::RZ: op = GateOp::rz(angle, qubits[0]); break;
            case GateKind::P: op = GateOp::p(angle, qubits[0]); break;
            case GateKind::CP: op = GateOp::cp(angle, qubits[0], qubits[1]); break;
            case GateKind::CX: op = GateOp::cx(qubits[0], qubits[1]); break;
            case GateKind::SWAP: op = GateOp::swap(qubits[0], qubits[1]); break;
            case GateKind::Measure: op = GateOp::measure(qubits[0], clbit); break;
            case GateKind::Barrier: op = GateOp::barrier(qubits[0]); break;
            default:
                op.kind = kind;
                op.qubits[0] = qubits[0];
                op.qubits[1] = qubits[0];
                break;
            }
            circuit->append(op);
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(e.what(), line_no);
        }
    }

    if (!n_qubits.has_value()) {
        throw ParseError("missing 'qubits <n>' header");
    }
    if (!circuit.has_value()) {
        try {
            circuit.emplace(*n_qubits, n_clbits, name);
        } catch (const std::exception &e) {
            throw ParseError(e.what());
        }
    }
    return *circuit;
}

Circuit parse_circuit(const std::string &text, const std::string &name) {
    std::istringstream in(text);
    return parse_circuit_stream(in, name);
}

Circuit load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open circuit file '" + path + "'");
    }
    return parse_circuit_stream(in, path);
}

void save_circuit(const Circuit &c, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write circuit file '" + path + "'");
    }
    serialize(c, out);
}

} // namespace qfalu
