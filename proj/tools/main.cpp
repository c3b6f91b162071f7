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

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qfalu/alu.hpp"
#include "qfalu/analysis.hpp"
#include "qfalu/circuit_io.hpp"
#include "qfalu/errors.hpp"
#include "qfalu/noise.hpp"
#include "qfalu/qft.hpp"
#include "qfalu/softcore.hpp"
#include "qfalu/statevector.hpp"
#include "qfalu/transpile.hpp"

using namespace qfalu;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

struct NoiseOptions {
    double p1 = 0.0;
    double p2 = 0.0;
    double readout = 0.0;
    double d1_ns = kDefaultD1Ns;
    double d2_ns = kDefaultD2Ns;
    std::string noise_file;
    std::string calibration_file;

    void add_flags(CLI::App *cmd) {
        cmd->add_option("--noise-p1", p1, "Pauli injection probability per one-qubit gate");
        cmd->add_option("--noise-p2", p2, "Pauli injection probability per two-qubit gate");
        cmd->add_option("--noise-readout", readout, "per-bit readout flip probability");
        cmd->add_option("--noise-file", noise_file, "JSON file with p1/p2/readout_flip/d1_ns/d2_ns");
        cmd->add_option("--calibration", calibration_file,
                        "calibration table; derives per-qubit noise from T1/T2");
        cmd->add_option("--d1", d1_ns, "one-qubit gate duration in ns (calibration mode)");
        cmd->add_option("--d2", d2_ns, "two-qubit gate duration in ns (calibration mode)");
    }

    void load_file() {
        if (noise_file.empty()) {
            return;
        }
        std::ifstream in(noise_file);
        if (!in) {
            throw ParseError("cannot open noise file '" + noise_file + "'");
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(std::string("noise file: ") + e.what());
        }
        p1 = j.value("p1", p1);
        p2 = j.value("p2", p2);
        readout = j.value("readout_flip", readout);
        d1_ns = j.value("d1_ns", d1_ns);
        d2_ns = j.value("d2_ns", d2_ns);
    }

    NoiseParams scalar() const {
        NoiseParams params;
        params.p1 = p1;
        params.p2 = p2;
        params.readout_flip = readout;
        params.d1_ns = d1_ns;
        params.d2_ns = d2_ns;
        return params;
    }

    bool active() const { return p1 > 0 || p2 > 0 || readout > 0 || !calibration_file.empty(); }

    /// Histogram under the configured noise: per-qubit parameters when a
    /// calibration table is given, the scalar model otherwise, and the
    /// noiseless sampler when everything is zero.
    ShotHistogram sample_with(const Circuit &c, const std::string &initial, std::uint64_t shots,
                              std::uint64_t seed) const {
        if (!calibration_file.empty()) {
            auto per_qubit = noise_from_calibration(load_calibration(calibration_file), d1_ns, d2_ns);
            if (per_qubit.size() < c.num_qubits()) {
                per_qubit.resize(c.num_qubits());
            }
            for (auto &entry : per_qubit) {
                entry.readout_flip = readout;
            }
            return sample_noisy(c, per_qubit, initial, shots, seed);
        }
        if (active()) {
            return sample_noisy(c, scalar(), initial, shots, seed);
        }
        return sample(c, initial, shots, seed);
    }
};

std::vector<int> parse_bit_list(const std::string &text) {
    std::vector<int> bits;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token == "0") {
            bits.push_back(0);
        } else if (token == "1") {
            bits.push_back(1);
        } else {
            throw std::invalid_argument("input bits must be a comma-separated list of 0/1");
        }
    }
    return bits;
}

Layout parse_layout(const std::string &text) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("layout entries look like logical:physical");
        }
        entries.emplace_back(std::uint32_t(std::stoul(token.substr(0, colon))),
                             std::uint32_t(std::stoul(token.substr(colon + 1))));
    }
    Layout layout(entries.size(), 0);
    std::vector<bool> seen(entries.size(), false);
    for (const auto &[logical, physical] : entries) {
        if (logical >= layout.size() || seen[logical]) {
            throw std::invalid_argument("layout must list every logical qubit exactly once");
        }
        layout[logical] = physical;
        seen[logical] = true;
    }
    return layout;
}

std::string mode_name(int select) { return select ? "NAND" : "ADD"; }

void print_histogram(std::ostream &out, const ShotHistogram &hist, bool chart) {
    for (const auto &[bits, count] : hist.counts) {
        out << bits << " " << count << "\n";
    }
    if (chart) {
        out << histogram_to_chart(hist);
    }
}

std::string oracle_bits(const std::vector<int> &inputs, int select) {
    const auto m = qalu_register_width(static_cast<std::uint32_t>(inputs.size()));
    std::uint32_t sum = 0;
    for (int bit : inputs) {
        sum += std::uint32_t(bit);
    }
    if (select == 1) {
        sum ^= 1u << (m - 1);
    }
    std::string bits(m, '0');
    for (std::uint32_t l = 0; l < m; ++l) {
        if (sum & (1u << l)) {
            bits[m - 1 - l] = '1';
        }
    }
    return bits;
}

CouplingMap resolve_coupling_map(const std::string &map_file) {
    if (!map_file.empty()) {
        return CouplingMap::load(map_file);
    }
    if (const char *env = std::getenv("QFALU_COUPLING_MAP"); env && *env) {
        return CouplingMap::load(env);
    }
    return default_coupling_map();
}

int cmd_qalu(const std::vector<int> &inputs, int select, std::uint64_t shots, std::uint64_t seed,
             bool as_json, bool chart, const NoiseOptions &noise) {
    if (inputs.size() < 2 || inputs.size() > 8) {
        std::cerr << "error: the ALU takes between 2 and 8 input bits\n";
        return kExitUsage;
    }
    const QaluCircuit qalu =
        inputs.size() == 2 ? build_qalu2() : build_qalu_multi(std::uint32_t(inputs.size()));
    if (select == 1 && !qalu.layout.nand_supported) {
        std::cerr << "error: NAND needs a power-of-two input count\n";
        return kExitUsage;
    }
    const std::string initial = qalu_initial_bits(qalu, inputs, select);
    const ShotHistogram hist = noise.sample_with(qalu.circuit, initial, shots, seed);

    std::string modal;
    std::uint64_t best = 0;
    for (const auto &[bits, count] : hist.counts) {
        if (count > best) {
            best = count;
            modal = bits;
        }
    }
    const double probability = double(best) / double(shots);

    if (as_json) {
        nlohmann::json j;
        j["mode"] = mode_name(select);
        j["bits"] = modal;
        j["probability"] = probability;
        j["histogram"] = nlohmann::json::object();
        for (const auto &[bits, count] : hist.counts) {
            j["histogram"][bits] = count;
        }
        j["shots"] = hist.shots;
        j["seed"] = hist.seed;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << mode_name(select) << " result: " << modal << "  probability " << std::fixed
              << std::setprecision(3) << probability << "\n";
    std::cout.unsetf(std::ios::floatfield);
    std::cout << std::setprecision(6);
    print_histogram(std::cout, hist, chart);
    return kExitOk;
}

int cmd_truth_table(std::uint32_t k, int select, std::uint64_t shots, std::uint64_t seed) {
    if (k < 2 || k > 5) {
        std::cerr << "error: truth tables cover 2 to 5 inputs\n";
        return kExitUsage;
    }
    const QaluCircuit qalu = k == 2 ? build_qalu2() : build_qalu_multi(k);
    if (select == 1 && !qalu.layout.nand_supported) {
        std::cerr << "error: NAND needs a power-of-two input count\n";
        return kExitUsage;
    }

    bool all_pass = true;
    std::cout << "q" << k - 1 << "..q0  oracle  simulated  verdict\n";
    for (std::uint32_t pattern = 0; pattern < (1u << k); ++pattern) {
        std::vector<int> inputs(k);
        std::string rendered(k, '0');
        for (std::uint32_t j = 0; j < k; ++j) {
            inputs[j] = int((pattern >> j) & 1);
            rendered[k - 1 - j] = inputs[j] ? '1' : '0';
        }
        const std::string expected = oracle_bits(inputs, select);
        const AluResult result = run_qalu(qalu, inputs, select, shots, seed);
        const bool pass = result.bits == expected;
        all_pass = all_pass && pass;
        std::cout << std::setw(6) << rendered << "  " << std::setw(6) << expected << "  "
                  << std::setw(9) << result.bits << "  " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? kExitOk : kExitInternal;
}

int cmd_gate_count(std::uint32_t n_max, bool csv, bool chart_json, bool transpiled) {
    if (transpiled && n_max > 10) {
        std::cerr << "error: --transpiled generates the circuits and is limited to --n-max 10\n";
        return kExitUsage;
    }
    const auto rows = report(n_max);
    if (chart_json) {
        std::cout << report_to_chart_json(rows) << "\n";
        return kExitOk;
    }
    if (csv) {
        std::cout << report_to_csv(rows, transpiled);
        return kExitOk;
    }
    std::cout << "# adding 2^n one-bit numbers; serial = full QFT/iQFT pass per addition into an\n"
                 "# (n+1)-bit accumulator, parallel = one QFT/iQFT pass with per-input phase fans\n";
    std::cout << std::setw(3) << "n" << std::setw(8) << "inputs" << std::setw(9) << "serial"
              << std::setw(10) << "parallel";
    if (transpiled) {
        std::cout << std::setw(12) << "serial(tr)" << std::setw(13) << "parallel(tr)";
    }
    std::cout << "\n";
    for (const auto &row : rows) {
        std::cout << std::setw(3) << row.n << std::setw(8) << row.inputs << std::setw(9)
                  << row.serial_count << std::setw(10) << row.parallel_count;
        if (transpiled) {
            std::cout << std::setw(12) << gate_count(decompose(build_serial_adder_reference(row.n)))
                      << std::setw(13) << gate_count(decompose(parallel_adder_portion(row.n)));
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_transpile(const std::string &infile, const std::string &map_file,
                  const std::string &layout_text, const std::string &outfile, bool verify) {
    if (layout_text.empty()) {
        std::cerr << "error: --layout is required (e.g. 0:1,1:0,2:2,3:3)\n";
        return kExitUsage;
    }
    const Circuit circuit = load_circuit(infile);
    const CouplingMap map = resolve_coupling_map(map_file);
    const Layout layout = parse_layout(layout_text);

    const Circuit lowered = decompose(circuit);
    const RoutedCircuit routed = route(lowered, map, layout);

    if (outfile.empty()) {
        serialize(routed.circuit, std::cout);
    } else {
        save_circuit(routed.circuit, outfile);
    }

    std::cerr << "wire tracking (wire: initial -> final physical qubit)\n";
    for (std::uint32_t wire = 0; wire < routed.n_logical; ++wire) {
        std::cerr << "  q" << wire << ": " << routed.initial_layout[wire] << " -> "
                  << routed.final_layout[wire] << "\n";
    }
    if (verify) {
        const EquivalenceResult check = verify_routed_equivalence(circuit, routed, 1e-8);
        std::cerr << "equivalence max deviation: " << check.max_deviation << "\n";
        if (!check.equivalent) {
            std::cerr << "error: routed circuit is NOT equivalent to the input\n";
            return kExitInternal;
        }
    }
    return kExitOk;
}

int cmd_simulate(const std::string &infile, const std::string &initial, std::uint64_t shots,
                 std::uint64_t seed, bool as_json, bool chart, const NoiseOptions &noise) {
    const Circuit circuit = load_circuit(infile);
    if (!circuit.has_measurements()) {
        std::cerr << "error: circuit has no measurements; nothing to sample\n";
        return kExitUsage;
    }
    const ShotHistogram hist = noise.sample_with(circuit, initial, shots, seed);
    if (as_json) {
        std::cout << histogram_to_json(hist) << "\n";
    } else {
        print_histogram(std::cout, hist, chart);
    }
    return kExitOk;
}

int cmd_softcore(const std::string &program_file, const std::vector<std::string> &presets,
                 std::uint32_t width, std::uint64_t shots, std::uint64_t seed,
                 const NoiseOptions &noise) {
    RegisterFile regs = RegisterFile::standard(width);
    for (const auto &preset : presets) {
        const auto eq = preset.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("register presets look like name=value");
        }
        regs.declare(preset.substr(0, eq), std::stoull(preset.substr(eq + 1)));
    }

    std::ifstream file;
    std::istream *in = &std::cin;
    if (!program_file.empty() && program_file != "-") {
        file.open(program_file);
        if (!file) {
            throw ParseError("cannot open program '" + program_file + "'");
        }
        in = &file;
    }

    const std::optional<NoiseParams> noise_params =
        noise.active() ? std::optional<NoiseParams>(noise.scalar()) : std::nullopt;

    std::string line;
    while (std::getline(*in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const Instruction instr = decode(line);
        regs = execute(instr, regs, shots, seed, noise_params);
        std::cout << (instr.opcode == Opcode::Nand ? "nand" : "add") << " $" << instr.dest << ", $"
                  << instr.src1 << ", $" << instr.src2 << "  => " << instr.dest << "="
                  << regs.get(instr.dest);
        for (const auto &[name, value] : regs.values()) {
            if (value != 0 && name != instr.dest) {
                std::cout << " " << name << "=" << value;
            }
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_build(const std::string &kind, std::uint32_t n, std::uint32_t k, std::uint32_t m,
              bool no_swaps, const std::string &outfile) {
    Circuit circuit(1);
    if (kind == "qft") {
        circuit = build_qft(n, !no_swaps);
    } else if (kind == "iqft") {
        circuit = build_iqft(n, !no_swaps);
    } else if (kind == "qalu2") {
        circuit = build_qalu2().circuit;
    } else if (kind == "qalu") {
        circuit = build_qalu_multi(k).circuit;
    } else if (kind == "adder") {
        circuit = build_fourier_adder(m);
    } else {
        std::cerr << "error: unknown builder '" << kind << "' (qft, iqft, qalu2, qalu, adder)\n";
        return kExitUsage;
    }
    if (outfile.empty()) {
        serialize(circuit, std::cout);
    } else {
        save_circuit(circuit, outfile);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"QFT-based quantum ALU toolkit: build, simulate, transpile and analyze"};
    app.require_subcommand(1);

    std::string in_text;
    int select = 0;
    std::uint64_t shots = 4096;
    std::uint64_t seed = 1;
    bool as_json = false;
    bool chart = false;
    NoiseOptions qalu_noise;
    auto *qalu_cmd = app.add_subcommand("qalu", "run the k-input ALU on the given bits");
    qalu_cmd->add_option("--in", in_text, "comma-separated input bits, e.g. 1,1")->required();
    qalu_cmd->add_option("--select", select, "0 = ADD, 1 = NAND")->check(CLI::Range(0, 1));
    qalu_cmd->add_option("--shots", shots);
    qalu_cmd->add_option("--seed", seed);
    qalu_cmd->add_flag("--json", as_json, "machine-readable result");
    qalu_cmd->add_flag("--chart", chart, "ASCII histogram");
    qalu_noise.add_flags(qalu_cmd);

    std::uint32_t table_k = 2;
    int table_select = 0;
    std::uint64_t table_shots = 512;
    std::uint64_t table_seed = 1;
    auto *table_cmd = app.add_subcommand("truth-table", "exhaustive ALU check against the oracle");
    table_cmd->add_option("--k", table_k, "number of inputs (2..5)")->required();
    table_cmd->add_option("--select", table_select)->check(CLI::Range(0, 1));
    table_cmd->add_option("--shots", table_shots);
    table_cmd->add_option("--seed", table_seed);

    std::uint32_t n_max = 8;
    bool csv = false;
    bool chart_json = false;
    bool transpiled = false;
    auto *count_cmd = app.add_subcommand("gate-count", "serial vs parallel adder gate budget");
    count_cmd->add_option("--n-max", n_max, "largest exponent (inputs = 2^n)");
    count_cmd->add_flag("--csv", csv);
    count_cmd->add_flag("--chart-json", chart_json);
    count_cmd->add_flag("--transpiled", transpiled, "also count after basis decomposition");

    std::string infile, map_file, layout_text, outfile;
    bool verify = false;
    auto *transpile_cmd = app.add_subcommand("transpile", "lower to {CX, ID, RZ, SX, X} and route");
    transpile_cmd->add_option("input", infile, "circuit file")->required();
    transpile_cmd->add_option("--map", map_file,
                              "coupling map JSON (default: $QFALU_COUPLING_MAP or built-in)");
    transpile_cmd->add_option("--layout", layout_text, "initial placement, e.g. 0:1,1:0,2:2,3:3");
    transpile_cmd->add_option("-o,--out", outfile, "write the routed circuit here (default stdout)");
    transpile_cmd->add_flag("--verify", verify, "check unitary equivalence after routing");

    std::string sim_file, sim_init;
    std::uint64_t sim_shots = 4096;
    std::uint64_t sim_seed = 1;
    bool sim_json = false;
    bool sim_chart = false;
    NoiseOptions sim_noise;
    auto *sim_cmd = app.add_subcommand("simulate", "sample a measured circuit from a file");
    sim_cmd->add_option("input", sim_file, "circuit file")->required();
    sim_cmd->add_option("--init", sim_init, "MSB-first initial bit string")->required();
    sim_cmd->add_option("--shots", sim_shots);
    sim_cmd->add_option("--seed", sim_seed);
    sim_cmd->add_flag("--json", sim_json);
    sim_cmd->add_flag("--chart", sim_chart);
    sim_noise.add_flags(sim_cmd);

    std::string program_file;
    std::vector<std::string> presets;
    std::uint32_t width = 1;
    std::uint64_t core_shots = 1024;
    std::uint64_t core_seed = 1;
    NoiseOptions core_noise;
    auto *core_cmd = app.add_subcommand("softcore", "decode and execute add/nand instructions");
    core_cmd->add_option("program", program_file, "instruction file ('-' or empty: stdin)");
    core_cmd->add_option("--reg", presets, "initial register value, name=value (repeatable)");
    core_cmd->add_option("--width", width, "operand word width in bits (1..3)");
    core_cmd->add_option("--shots", core_shots);
    core_cmd->add_option("--seed", core_seed);
    core_noise.add_flags(core_cmd);

    std::string build_kind;
    std::uint32_t build_n = 3;
    std::uint32_t build_k = 4;
    std::uint32_t build_m = 2;
    bool no_swaps = false;
    std::string build_out;
    auto *build_cmd = app.add_subcommand("build", "emit a builder circuit in the text format");
    build_cmd->add_option("kind", build_kind, "qft | iqft | qalu2 | qalu | adder")->required();
    build_cmd->add_option("--n", build_n, "qubits for qft/iqft");
    build_cmd->add_option("--k", build_k, "inputs for qalu");
    build_cmd->add_option("--m", build_m, "register width for adder");
    build_cmd->add_flag("--no-swaps", no_swaps, "omit the order-reversing swaps");
    build_cmd->add_option("-o,--out", build_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (qalu_cmd->parsed()) {
            qalu_noise.load_file();
            return cmd_qalu(parse_bit_list(in_text), select, shots, seed, as_json, chart, qalu_noise);
        }
        if (table_cmd->parsed()) {
            return cmd_truth_table(table_k, table_select, table_shots, table_seed);
        }
        if (count_cmd->parsed()) {
            return cmd_gate_count(n_max, csv, chart_json, transpiled);
        }
        if (transpile_cmd->parsed()) {
            return cmd_transpile(infile, map_file, layout_text, outfile, verify);
        }
        if (sim_cmd->parsed()) {
            sim_noise.load_file();
            return cmd_simulate(sim_file, sim_init, sim_shots, sim_seed, sim_json, sim_chart,
                                sim_noise);
        }
        if (core_cmd->parsed()) {
            core_noise.load_file();
            return cmd_softcore(program_file, presets, width, core_shots, core_seed, core_noise);
        }
        if (build_cmd->parsed()) {
            return cmd_build(build_kind, build_n, build_k, build_m, no_swaps, build_out);
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedInstructionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedGateError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
