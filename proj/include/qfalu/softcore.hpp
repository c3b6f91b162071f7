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
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qfalu/noise.hpp"

namespace qfalu {

// Minimal soft-core front end: three-register ADD/NAND instructions decoded
// from assembly-style text and executed on the quantum ALU circuits.

enum class Opcode : std::uint8_t { Add, Nand };

struct Instruction {
    Opcode opcode = Opcode::Add;
    std::string dest;
    std::string src1;
    std::string src2;
};

/// Parse `<op> $rd, $rs, $rt` (opcode case-insensitive). Unknown opcodes
/// raise UnsupportedInstructionError, malformed operands ParseError.
Instruction decode(std::string_view line);

/// Named unsigned registers with a fixed operand word width. Source operands
/// must fit word_width bits; an ADD destination additionally holds the
/// carry-out bit (there is no flags register).
class RegisterFile {
  public:
    explicit RegisterFile(std::uint32_t word_width = 1);

    /// t0..t9 and s0..s7, all zero.
    static RegisterFile standard(std::uint32_t word_width = 1);

    std::uint32_t word_width() const { return word_width_; }
    bool contains(const std::string &name) const;
    std::uint64_t get(const std::string &name) const;
    void set(const std::string &name, std::uint64_t value);
    void declare(const std::string &name, std::uint64_t value = 0);
    const std::map<std::string, std::uint64_t> &values() const { return regs_; }

  private:
    std::uint32_t word_width_;
    std::map<std::string, std::uint64_t> regs_;
};

/// Execute one instruction: encode the source operands on the ALU inputs,
/// select ADD or NAND, sample, and write the modal outcome to dest.
/// Width 1 runs the two-input ALU (ADD result is the 2-bit sum with carry);
/// widths 2..3 run the in-place Fourier adder (sum modulo 2^width) and a
/// per-bit ALU pass for NAND. Sources are never modified.
RegisterFile execute(const Instruction &instr, const RegisterFile &regs, std::uint64_t shots = 1024,
                     std::uint64_t seed = 1, const std::optional<NoiseParams> &noise = std::nullopt);

inline constexpr std::uint32_t kMaxSoftcoreWordWidth = 3;

} // namespace qfalu
