# Copyright 2026 The qfalu developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""QFT-based quantum ALU toolkit.

Circuit construction, dense state-vector simulation, basis-gate
transpilation with qubit routing, stochastic Pauli noise, gate-count
analysis and a minimal soft-core instruction demo, all backed by the
C++ extension module.
"""

from qfalu._core import (  # noqa: F401
    AluMode,
    AluResult,
    CalibrationRecord,
    Circuit,
    CircuitParseError,
    CouplingMap,
    EquivalenceResult,
    GateCountRow,
    GateKind,
    GateOp,
    Instruction,
    NoiseParams,
    Opcode,
    QaluCircuit,
    QaluLayout,
    RegisterFile,
    RoutedCircuit,
    ShotHistogram,
    StateVector,
    __version__,
    build_fourier_adder,
    build_iqft,
    build_qalu2,
    build_qalu_multi,
    build_qft,
    build_serial_adder_reference,
    count_parallel,
    count_serial,
    decode,
    decompose,
    default_coupling_map,
    dft_matrix,
    execute,
    gate_count,
    histogram_to_chart,
    histogram_to_json,
    inverse,
    is_basis_gate,
    load_calibration,
    load_circuit,
    noise_from_calibration,
    parallel_adder_portion,
    parse_calibration,
    parse_circuit,
    qalu_initial_bits,
    qalu_register_width,
    qft_gate_cost,
    report,
    report_to_chart_json,
    report_to_csv,
    route,
    run,
    run_qalu,
    sample,
    sample_noisy,
    save_circuit,
    serialize,
    unitary_of,
    verify_equivalence,
    verify_routed_equivalence,
)
