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

#include "doctest.h"

#include "qfalu/errors.hpp"
#include "qfalu/softcore.hpp"

using namespace qfalu;

TEST_CASE("decode parses three-register instructions") {
    const Instruction add = decode("add $t0, $s0, $s1");
    CHECK(add.opcode == Opcode::Add);
    CHECK(add.dest == "t0");
    CHECK(add.src1 == "s0");
    CHECK(add.src2 == "s1");

    const Instruction nand = decode("NAND $t1, $s0, $s1");
    CHECK(nand.opcode == Opcode::Nand);
    CHECK(nand.dest == "t1");

    const Instruction spaced = decode("  add   $t2 ,$s3,  $s4  ");
    CHECK(spaced.src2 == "s4");

    CHECK_THROWS_AS(decode("mul $t0, $s0, $s1"), UnsupportedInstructionError);
    CHECK_THROWS_AS(decode("add $t0, $s0"), ParseError);
    CHECK_THROWS_AS(decode("add t0, s0, s1"), ParseError);
    CHECK_THROWS_AS(decode("add"), ParseError);
}

TEST_CASE("register file basics") {
    RegisterFile regs = RegisterFile::standard();
    CHECK(regs.word_width() == 1);
    CHECK(regs.contains("t0"));
    CHECK(regs.contains("s7"));
    CHECK(regs.get("t9") == 0);
    regs.set("s0", 1);
    CHECK(regs.get("s0") == 1);
    CHECK_THROWS_AS(regs.get("zero"), std::invalid_argument);
    CHECK_THROWS_AS(regs.set("q5", 1), std::invalid_argument);
    CHECK_THROWS_AS(RegisterFile(0), std::invalid_argument);
    CHECK_THROWS_AS(RegisterFile(4), std::invalid_argument);
}

TEST_CASE("one-bit add leaves the full sum, carry included") {
    RegisterFile regs = RegisterFile::standard();
    regs.set("s0", 1);
    regs.set("s1", 1);
    const RegisterFile after = execute(decode("add $t0, $s0, $s1"), regs);
    CHECK(after.get("t0") == 2);
    CHECK(after.get("s0") == 1);
    CHECK(after.get("s1") == 1);

    const RegisterFile nand = execute(decode("nand $t0, $s0, $s1"), regs);
    CHECK(nand.get("t0") == 0);
}

TEST_CASE("one-bit semantics match the classical ALU for every operand pair") {
    for (std::uint64_t a = 0; a <= 1; ++a) {
        for (std::uint64_t b = 0; b <= 1; ++b) {
            RegisterFile regs = RegisterFile::standard();
            regs.set("s0", a);
            regs.set("s1", b);
            const RegisterFile sum = execute(decode("add $t0, $s0, $s1"), regs);
            CHECK(sum.get("t0") == a + b);
            const RegisterFile nand = execute(decode("nand $t1, $s0, $s1"), regs);
            CHECK(nand.get("t1") == (1 - (a & b)));
        }
    }
}

TEST_CASE("wider words run through the Fourier adder") {
    RegisterFile regs = RegisterFile::standard(2);
    regs.set("s0", 2);
    regs.set("s1", 3);
    CHECK(execute(decode("add $t0, $s0, $s1"), regs).get("t0") == 1); // 5 mod 4
    CHECK(execute(decode("nand $t0, $s0, $s1"), regs).get("t0") == 1); // ~(10 & 11) in 2 bits

    RegisterFile wide = RegisterFile::standard(3);
    wide.set("s0", 5);
    wide.set("s1", 6);
    CHECK(execute(decode("add $t0, $s0, $s1"), wide).get("t0") == 3); // 11 mod 8
    CHECK(execute(decode("nand $t0, $s0, $s1"), wide).get("t0") == 3); // ~(101 & 110) in 3 bits
}

TEST_CASE("execute validates registers and operand widths") {
    RegisterFile regs = RegisterFile::standard();
    regs.set("s0", 1);
    CHECK_THROWS_AS(execute(decode("add $t0, $s0, $x1"), regs), std::invalid_argument);
    CHECK_THROWS_AS(execute(decode("add $x0, $s0, $s1"), regs), std::invalid_argument);

    RegisterFile overfull = RegisterFile::standard();
    overfull.declare("big", 2);
    CHECK_THROWS_AS(execute(decode("add $t0, $big, $s1"), overfull), std::invalid_argument);
    CHECK_THROWS_AS(execute(decode("add $t0, $s0, $s1"), regs, 0), std::invalid_argument);
}
