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

#include "qfalu/softcore.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qfalu/alu.hpp"
#include "qfalu/errors.hpp"
#include "qfalu/statevector.hpp"

namespace qfalu {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return s;
}

std::string strip(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return std::string(s.substr(begin, end - begin));
}

std::string parse_register(const std::string &token) {
    if (token.size() < 2 || token[0] != '$') {
        throw ParseError("register operand must look like $name, got '" + token + "'");
    }
    return token.substr(1);
}

} // namespace

Instruction decode(std::string_view line) {
    const std::string text = strip(line);
    const std::size_t space = text.find_first_of(" \t");
    if (space == std::string::npos) {
        throw ParseError("instruction syntax is: <op> $rd, $rs, $rt");
    }
    const std::string mnemonic = lowercase(text.substr(0, space));

    Instruction instr;
    if (mnemonic == "add") {
        instr.opcode = Opcode::Add;
    } else if (mnemonic == "nand") {
        instr.opcode = Opcode::Nand;
    } else {
        throw UnsupportedInstructionError("unsupported instruction '" + mnemonic + "'");
    }

    std::vector<std::string> operands;
    std::string operand;
    std::istringstream rest(text.substr(space + 1));
    while (std::getline(rest, operand, ',')) {
        operands.push_back(strip(operand));
    }
    if (operands.size() != 3 || operands[0].empty() || operands[1].empty() || operands[2].empty()) {
        throw ParseError("expected three register operands: <op> $rd, $rs, $rt");
    }
    instr.dest = parse_register(operands[0]);
    instr.src1 = parse_register(operands[1]);
    instr.src2 = parse_register(operands[2]);
    return instr;
}

RegisterFile::RegisterFile(std::uint32_t word_width) : word_width_(word_width) {
    if (word_width == 0 || word_width > kMaxSoftcoreWordWidth) {
        throw std::invalid_argument("word width must be between 1 and " +
                                    std::to_string(kMaxSoftcoreWordWidth));
    }
}

RegisterFile RegisterFile::standard(std::uint32_t word_width) {
    RegisterFile regs(word_width);
    for (int i = 0; i <= 9; ++i) {
        regs.declare("t" + std::to_string(i));
    }
    for (int i = 0; i <= 7; ++i) {
        regs.declare("s" + std::to_string(i));
    }
    return regs;
}

bool RegisterFile::contains(const std::string &name) const { return regs_.count(name) > 0; }

std::uint64_t RegisterFile::get(const std::string &name) const {
    auto it = regs_.find(name);
    if (it == regs_.end()) {
        throw std::invalid_argument("unknown register '" + name + "'");
    }
    return it->second;
}

void RegisterFile::set(const std::string &name, std::uint64_t value) {
    auto it = regs_.find(name);
    if (it == regs_.end()) {
        throw std::invalid_argument("unknown register '" + name + "'");
    }
    it->second = value;
}

void RegisterFile::declare(const std::string &name, std::uint64_t value) { regs_[name] = value; }

namespace {

std::uint64_t bits_to_value(const std::string &bits) {
    std::uint64_t value = 0;
    for (char ch : bits) {
        value = (value << 1) | std::uint64_t(ch == '1');
    }
    return value;
}

/// One-bit ALU pass over a pair of operand bits.
std::uint64_t run_bit_alu(int a, int b, AluMode mode, std::uint64_t shots, std::uint64_t seed,
                          const std::optional<NoiseParams> &noise) {
    static const QaluCircuit qalu2 = build_qalu2();
    const AluResult result =
        run_qalu(qalu2, {a, b}, mode == AluMode::Nand ? 1 : 0, shots, seed, noise);
    std::uint64_t word = bits_to_value(result.bits);
    if (mode == AluMode::Nand) {
        word >>= 1; // the NAND bit is the complemented carry
    }
    return word;
}

/// Modal measured value of the m-bit Fourier adder on |a, b>.
std::uint64_t run_adder(std::uint32_t m, std::uint64_t a, std::uint64_t b, std::uint64_t shots,
                        std::uint64_t seed, const std::optional<NoiseParams> &noise) {
    Circuit c = build_fourier_adder(m);
    Circuit measured(c.num_qubits(), m, c.name());
    measured.extend(c);
    for (std::uint32_t l = 0; l < m; ++l) {
        measured.append(GateOp::measure(l, l));
    }
    std::string initial(2 * m, '0');
    for (std::uint32_t j = 0; j < m; ++j) {
        if (a & (std::uint64_t{1} << j)) {
            initial[2 * m - 1 - j] = '1';
        }
        if (b & (std::uint64_t{1} << j)) {
            initial[2 * m - 1 - (m + j)] = '1';
        }
    }
    const ShotHistogram hist = noise.has_value() ? sample_noisy(measured, *noise, initial, shots, seed)
                                                 : sample(measured, initial, shots, seed);
    std::uint64_t best = 0;
    std::string modal;
    for (const auto &[bits, count] : hist.counts) {
        if (count > best) {
            best = count;
            modal = bits;
        }
    }
    return bits_to_value(modal);
}

} // namespace

RegisterFile execute(const Instruction &instr, const RegisterFile &regs, std::uint64_t shots,
                     std::uint64_t seed, const std::optional<NoiseParams> &noise) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    const std::uint64_t a = regs.get(instr.src1);
    const std::uint64_t b = regs.get(instr.src2);
    if (!regs.contains(instr.dest)) {
        throw std::invalid_argument("unknown register '" + instr.dest + "'");
    }
    const std::uint32_t width = regs.word_width();
    const std::uint64_t limit = std::uint64_t{1} << width;
    if (a >= limit || b >= limit) {
        throw std::invalid_argument("source operand exceeds the " + std::to_string(width) +
                                    "-bit word width");
    }

    RegisterFile out = regs;
    if (width == 1) {
        out.set(instr.dest, run_bit_alu(int(a), int(b), instr.opcode == Opcode::Nand ? AluMode::Nand
                                                                                     : AluMode::Add,
                                        shots, seed, noise));
        return out;
    }

    if (instr.opcode == Opcode::Add) {
        out.set(instr.dest, run_adder(width, a, b, shots, seed, noise));
    } else {
        std::uint64_t word = 0;
        for (std::uint32_t bit = 0; bit < width; ++bit) {
            const std::uint64_t nand_bit = run_bit_alu(int((a >> bit) & 1), int((b >> bit) & 1),
                                                       AluMode::Nand, shots, seed + bit, noise);
            word |= nand_bit << bit;
        }
        out.set(instr.dest, word);
    }
    return out;
}

} // namespace qfalu
