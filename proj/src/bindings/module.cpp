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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfalu/alu.hpp"
#include "qfalu/analysis.hpp"
#include "qfalu/circuit_io.hpp"
#include "qfalu/errors.hpp"
#include "qfalu/noise.hpp"
#include "qfalu/qft.hpp"
#include "qfalu/softcore.hpp"
#include "qfalu/statevector.hpp"
#include "qfalu/transpile.hpp"

namespace py = pybind11;
using namespace qfalu;

namespace {

std::vector<std::vector<Complex>> matrix_rows(const CMatrix &m) {
    std::vector<std::vector<Complex>> rows(m.dim(), std::vector<Complex>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            rows[r][c] = m.at(r, c);
        }
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "QFT-based quantum ALU toolkit: circuits, simulation, transpilation, noise";

    py::register_exception<ParseError>(m, "CircuitParseError", PyExc_ValueError);

    py::enum_<GateKind>(m, "GateKind")
        .value("H", GateKind::H)
        .value("X", GateKind::X)
        .value("SX", GateKind::SX)
        .value("SXDG", GateKind::SXDG)
        .value("ID", GateKind::ID)
        .value("RZ", GateKind::RZ)
        .value("P", GateKind::P)
        .value("CP", GateKind::CP)
        .value("CX", GateKind::CX)
        .value("SWAP", GateKind::SWAP)
        .value("MEASURE", GateKind::Measure)
        .value("BARRIER", GateKind::Barrier);

    py::class_<GateOp>(m, "GateOp")
        .def_readonly("kind", &GateOp::kind)
        .def_readonly("angle", &GateOp::angle)
        .def_property_readonly("qubits",
                               [](const GateOp &op) {
                                   std::vector<QubitIndex> qs{op.qubits[0]};
                                   if (op.arity() == 2) {
                                       qs.push_back(op.qubits[1]);
                                   }
                                   return qs;
                               })
        .def_readonly("clbit", &GateOp::clbit)
        .def_static("h", &GateOp::h, py::arg("qubit"))
        .def_static("x", &GateOp::x, py::arg("qubit"))
        .def_static("sx", &GateOp::sx, py::arg("qubit"))
        .def_static("sxdg", &GateOp::sxdg, py::arg("qubit"))
        .def_static("id", &GateOp::id, py::arg("qubit"))
        .def_static("rz", &GateOp::rz, py::arg("angle"), py::arg("qubit"))
        .def_static("p", &GateOp::p, py::arg("angle"), py::arg("qubit"))
        .def_static("cp", &GateOp::cp, py::arg("angle"), py::arg("control"), py::arg("target"))
        .def_static("cx", &GateOp::cx, py::arg("control"), py::arg("target"))
        .def_static("swap", &GateOp::swap, py::arg("a"), py::arg("b"))
        .def_static("measure", &GateOp::measure, py::arg("qubit"), py::arg("clbit"))
        .def_static("barrier", &GateOp::barrier, py::arg("qubit"))
        .def("__eq__", [](const GateOp &a, const GateOp &b) { return a == b; })
        .def("__repr__", [](const GateOp &op) {
            return std::string("GateOp(") + to_string(op.kind) + ")";
        });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<std::uint32_t, std::uint32_t, std::string>(), py::arg("n_qubits"),
             py::arg("n_clbits") = 0, py::arg("name") = "")
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("num_clbits", &Circuit::num_clbits)
        .def_property_readonly("name", &Circuit::name)
        .def_property_readonly("ops", [](const Circuit &c) { return c.ops(); })
        .def("append", &Circuit::append)
        .def("extend", py::overload_cast<const Circuit &>(&Circuit::extend))
        .def("has_measurements", &Circuit::has_measurements)
        .def("structurally_equal", &Circuit::structurally_equal)
        .def("__len__", &Circuit::size)
        .def("__repr__", [](const Circuit &c) {
            return "Circuit(n_qubits=" + std::to_string(c.num_qubits()) +
                   ", n_clbits=" + std::to_string(c.num_clbits()) +
                   ", ops=" + std::to_string(c.size()) + ")";
        });

    m.def("inverse", &inverse, py::arg("circuit"));
    m.def("gate_count", py::overload_cast<const Circuit &>(&gate_count), py::arg("circuit"));
    m.def("gate_count",
          py::overload_cast<const Circuit &, const std::vector<GateKind> &>(&gate_count),
          py::arg("circuit"), py::arg("kinds"));
    m.def("serialize", py::overload_cast<const Circuit &>(&serialize), py::arg("circuit"));
    m.def("parse_circuit", &parse_circuit, py::arg("text"), py::arg("name") = "");
    m.def("load_circuit", &load_circuit, py::arg("path"));
    m.def("save_circuit", &save_circuit, py::arg("circuit"), py::arg("path"));

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<std::uint32_t>(), py::arg("n_qubits"))
        .def_static("basis", &StateVector::basis, py::arg("n_qubits"), py::arg("bits"))
        .def_property_readonly("num_qubits", &StateVector::num_qubits)
        .def_property_readonly("amplitudes", &StateVector::amplitudes)
        .def("probability", &StateVector::probability, py::arg("basis_index"))
        .def("apply", &StateVector::apply, py::arg("op"))
        .def("norm", &StateVector::norm);

    py::class_<ShotHistogram>(m, "ShotHistogram")
        .def_readonly("shots", &ShotHistogram::shots)
        .def_readonly("counts", &ShotHistogram::counts)
        .def_readonly("seed", &ShotHistogram::seed)
        .def("__repr__", [](const ShotHistogram &h) { return histogram_to_json(h); });

    m.def("run", &run, py::arg("circuit"), py::arg("initial"));
    m.def("unitary_of", [](const Circuit &c) { return matrix_rows(unitary_of(c)); },
          py::arg("circuit"));
    m.def("sample", &sample, py::arg("circuit"), py::arg("initial"), py::arg("shots"),
          py::arg("seed"));
    m.def("histogram_to_json", &histogram_to_json);
    m.def("histogram_to_chart", &histogram_to_chart, py::arg("histogram"), py::arg("width") = 40);

    m.def("build_qft",
          [](std::uint32_t n, bool include_swaps) { return build_qft(n, include_swaps); },
          py::arg("n_qubits"), py::arg("include_swaps") = true);
    m.def("build_iqft",
          [](std::uint32_t n, bool include_swaps) { return build_iqft(n, include_swaps); },
          py::arg("n_qubits"), py::arg("include_swaps") = true);
    m.def("dft_matrix", [](std::uint32_t n) { return matrix_rows(dft_matrix(n)); },
          py::arg("n_qubits"));

    py::enum_<AluMode>(m, "AluMode").value("ADD", AluMode::Add).value("NAND", AluMode::Nand);

    py::class_<QaluLayout>(m, "QaluLayout")
        .def_readonly("select", &QaluLayout::select)
        .def_readonly("inputs", &QaluLayout::inputs)
        .def_readonly("ancillas", &QaluLayout::ancillas)
        .def_readonly("result_clbits", &QaluLayout::result_clbits)
        .def_readonly("nand_supported", &QaluLayout::nand_supported);

    py::class_<QaluCircuit>(m, "QaluCircuit")
        .def_readonly("circuit", &QaluCircuit::circuit)
        .def_readonly("layout", &QaluCircuit::layout);

    py::class_<AluResult>(m, "AluResult")
        .def_readonly("bits", &AluResult::bits)
        .def_readonly("mode", &AluResult::mode)
        .def_readonly("success_probability", &AluResult::success_probability)
        .def("__repr__", [](const AluResult &r) {
            return "AluResult(bits='" + r.bits + "', p=" + std::to_string(r.success_probability) + ")";
        });

    m.def("build_qalu2", &build_qalu2);
    m.def("build_qalu_multi", &build_qalu_multi, py::arg("k"));
    m.def("build_fourier_adder", &build_fourier_adder, py::arg("m"));
    m.def("qalu_register_width", &qalu_register_width, py::arg("k"));
    m.def("qalu_initial_bits", &qalu_initial_bits, py::arg("qalu"), py::arg("inputs"),
          py::arg("select"));
    m.def("run_qalu", &run_qalu, py::arg("qalu"), py::arg("inputs"), py::arg("select"),
          py::arg("shots") = 4096, py::arg("seed") = 1,
          py::arg("noise") = std::optional<NoiseParams>());

    py::class_<CouplingMap>(m, "CouplingMap")
        .def(py::init<>())
        .def_readwrite("n_physical", &CouplingMap::n_physical)
        .def_property_readonly("edges",
                               [](const CouplingMap &map) {
                                   std::vector<std::pair<QubitIndex, QubitIndex>> out(
                                       map.edges.begin(), map.edges.end());
                                   return out;
                               })
        .def("add_edge", &CouplingMap::add_edge)
        .def("has_edge", &CouplingMap::has_edge)
        .def("is_connected", &CouplingMap::is_connected)
        .def("to_json", &CouplingMap::to_json)
        .def_static("from_json", &CouplingMap::from_json, py::arg("text"))
        .def_static("load", &CouplingMap::load, py::arg("path"));

    m.def("default_coupling_map", &default_coupling_map);
    m.def("decompose", &decompose, py::arg("circuit"));
    m.def("is_basis_gate", &is_basis_gate, py::arg("kind"));

    py::class_<RoutedCircuit>(m, "RoutedCircuit")
        .def_readonly("circuit", &RoutedCircuit::circuit)
        .def_readonly("initial_layout", &RoutedCircuit::initial_layout)
        .def_readonly("final_layout", &RoutedCircuit::final_layout)
        .def_readonly("n_logical", &RoutedCircuit::n_logical)
        .def("embed_initial_bits", &RoutedCircuit::embed_initial_bits, py::arg("logical_bits"));

    m.def("route", &route, py::arg("circuit"), py::arg("coupling_map"), py::arg("initial_layout"));

    py::class_<EquivalenceResult>(m, "EquivalenceResult")
        .def_readonly("equivalent", &EquivalenceResult::equivalent)
        .def_readonly("max_deviation", &EquivalenceResult::max_deviation);

    m.def("verify_equivalence", &verify_equivalence, py::arg("a"), py::arg("b"), py::arg("tol"));
    m.def("verify_routed_equivalence", &verify_routed_equivalence, py::arg("original"),
          py::arg("routed"), py::arg("tol"));

    py::class_<CalibrationRecord>(m, "CalibrationRecord")
        .def_readonly("qubit", &CalibrationRecord::qubit)
        .def_readonly("t1_us", &CalibrationRecord::t1_us)
        .def_readonly("t2_us", &CalibrationRecord::t2_us)
        .def_readonly("frequency_ghz", &CalibrationRecord::frequency_ghz);

    py::class_<NoiseParams>(m, "NoiseParams")
        .def(py::init<>())
        .def_readwrite("p1", &NoiseParams::p1)
        .def_readwrite("p2", &NoiseParams::p2)
        .def_readwrite("readout_flip", &NoiseParams::readout_flip)
        .def_readwrite("d1_ns", &NoiseParams::d1_ns)
        .def_readwrite("d2_ns", &NoiseParams::d2_ns);

    m.def("parse_calibration", &parse_calibration, py::arg("text"));
    m.def("load_calibration", &load_calibration, py::arg("path"));
    m.def("noise_from_calibration", &noise_from_calibration, py::arg("records"),
          py::arg("d1_ns") = kDefaultD1Ns, py::arg("d2_ns") = kDefaultD2Ns);
    m.def("sample_noisy",
          py::overload_cast<const Circuit &, const NoiseParams &, std::string_view, std::uint64_t,
                            std::uint64_t>(&sample_noisy),
          py::arg("circuit"), py::arg("noise"), py::arg("initial"), py::arg("shots"),
          py::arg("seed"));
    m.def("sample_noisy",
          py::overload_cast<const Circuit &, const std::vector<NoiseParams> &, std::string_view,
                            std::uint64_t, std::uint64_t>(&sample_noisy),
          py::arg("circuit"), py::arg("per_qubit"), py::arg("initial"), py::arg("shots"),
          py::arg("seed"));

    py::class_<GateCountRow>(m, "GateCountRow")
        .def_readonly("n", &GateCountRow::n)
        .def_readonly("inputs", &GateCountRow::inputs)
        .def_readonly("serial_count", &GateCountRow::serial_count)
        .def_readonly("parallel_count", &GateCountRow::parallel_count);

    m.def("qft_gate_cost", &qft_gate_cost, py::arg("m"));
    m.def("count_parallel", &count_parallel, py::arg("n"));
    m.def("count_serial", &count_serial, py::arg("n"));
    m.def("report", &report, py::arg("n_max"));
    m.def("parallel_adder_portion", &parallel_adder_portion, py::arg("n"));
    m.def("build_serial_adder_reference", &build_serial_adder_reference, py::arg("n"));
    m.def("report_to_csv", &report_to_csv, py::arg("rows"), py::arg("with_transpiled") = false);
    m.def("report_to_chart_json", &report_to_chart_json, py::arg("rows"));

    py::enum_<Opcode>(m, "Opcode").value("ADD", Opcode::Add).value("NAND", Opcode::Nand);

    py::class_<Instruction>(m, "Instruction")
        .def_readonly("opcode", &Instruction::opcode)
        .def_readonly("dest", &Instruction::dest)
        .def_readonly("src1", &Instruction::src1)
        .def_readonly("src2", &Instruction::src2);

    py::class_<RegisterFile>(m, "RegisterFile")
        .def(py::init<std::uint32_t>(), py::arg("word_width") = 1)
        .def_static("standard", &RegisterFile::standard, py::arg("word_width") = 1)
        .def_property_readonly("word_width", &RegisterFile::word_width)
        .def("contains", &RegisterFile::contains)
        .def("get", &RegisterFile::get)
        .def("set", &RegisterFile::set)
        .def("declare", &RegisterFile::declare, py::arg("name"), py::arg("value") = 0)
        .def_property_readonly("values", &RegisterFile::values);

    m.def("decode", &decode, py::arg("line"));
    m.def("execute", &execute, py::arg("instruction"), py::arg("registers"),
          py::arg("shots") = 1024, py::arg("seed") = 1,
          py::arg("noise") = std::optional<NoiseParams>());

    m.attr("__version__") = "0.1.0";
}
