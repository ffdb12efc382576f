// Copyright 2026 The qreuse Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qreuse/circuit.hpp"
#include "qreuse/generate.hpp"
#include "qreuse/qasm.hpp"

using namespace qreuse;

namespace {

Circuit parse_ok(const std::string& text) {
  ParseResult r = parse_qasm(text);
  for (const auto& d : r.diagnostics)
    INFO(d.line, ":", d.column, ": ", d.message);
  REQUIRE(r.ok());
  return std::move(*r.circuit);
}

Diagnostic parse_fail(const std::string& text) {
  ParseResult r = parse_qasm(text);
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.diagnostics.empty());
  return r.diagnostics.front();
}

const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

}  // namespace

TEST_CASE("parse a five-bit hidden-string circuit") {
  std::string text = std::string(kHeader) + R"(
qreg q[6];
creg c[5];
x q[5];
h q[5];
h q[0]; h q[1]; h q[2]; h q[3]; h q[4];
cx q[0],q[5];
cx q[1],q[5];
h q[0]; h q[1]; h q[2]; h q[3]; h q[4];
measure q[0] -> c[0];
measure q[1] -> c[1];
measure q[2] -> c[2];
measure q[3] -> c[3];
measure q[4] -> c[4];
)";
  Circuit c = parse_ok(text);
  CHECK(c.num_qubits == 6);
  CHECK(c.num_clbits == 5);
  GateCounts g = count_gates(c);
  CHECK(g.cnot_count == 2);
  CHECK(g.measure_count == 5);
  CHECK(c.instructions.size() == 19);
  CHECK(validate(c).empty());
}

TEST_CASE("header is mandatory and versioned") {
  Diagnostic d = parse_fail("qreg q[2];\n");
  CHECK(d.line == 1);
  parse_fail("OPENQASM 3.0;\nqreg q[2];\n");
  // Integer form of the version is accepted.
  Circuit c = parse_ok("OPENQASM 2;\nqreg q[1];\n");
  CHECK(c.num_qubits == 1);
}

TEST_CASE("classical conditionals are rejected with a position") {
  std::string text = std::string(kHeader) +
                     "qreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\n"
                     "if (c == 1) x q[0];\n";
  Diagnostic d = parse_fail(text);
  CHECK(d.line == 6);  // header + include occupy lines 1-2
  CHECK(d.column == 1);
  CHECK(d.message.find("conditional") != std::string::npos);
}

TEST_CASE("only the standard include is honored") {
  parse_fail("OPENQASM 2.0;\ninclude \"mylib.inc\";\nqreg q[1];\n");
}

TEST_CASE("parameter expressions evaluate at parse time") {
  std::string text = std::string(kHeader) + R"(
qreg q[1];
rz(pi/2) q[0];
rz(-pi) q[0];
rz(2*pi - pi/4) q[0];
rz((1+2)*3) q[0];
u3(0.5,0.25,0.125) q[0];
)";
  Circuit c = parse_ok(text);
  REQUIRE(c.instructions.size() == 5);
  const double pi = 3.14159265358979323846;
  CHECK(c.instructions[0].params[0] == doctest::Approx(pi / 2));
  CHECK(c.instructions[1].params[0] == doctest::Approx(-pi));
  CHECK(c.instructions[2].params[0] == doctest::Approx(2 * pi - pi / 4));
  CHECK(c.instructions[3].params[0] == doctest::Approx(9.0));
  CHECK(c.instructions[4].params[0] == doctest::Approx(0.5));

  parse_fail(std::string(kHeader) + "qreg q[1];\nrz(1/0) q[0];\n");
  parse_fail(std::string(kHeader) + "qreg q[1];\nrz(sin(1)) q[0];\n");
}

TEST_CASE("whole-register operands broadcast") {
  SUBCASE("single-qubit gate over a register") {
    Circuit c = parse_ok(std::string(kHeader) + "qreg q[3];\nh q;\n");
    REQUIRE(c.instructions.size() == 3);
    for (QubitId i = 0; i < 3; ++i) CHECK(c.instructions[i].qubits[0] == i);
  }
  SUBCASE("cx register-register broadcasts pairwise") {
    Circuit c =
        parse_ok(std::string(kHeader) + "qreg a[2];\nqreg b[2];\ncx a,b;\n");
    REQUIRE(c.instructions.size() == 2);
    CHECK(c.instructions[0].qubits == std::vector<QubitId>{0, 2});
    CHECK(c.instructions[1].qubits == std::vector<QubitId>{1, 3});
  }
  SUBCASE("cx register-qubit repeats the indexed operand") {
    Circuit c =
        parse_ok(std::string(kHeader) + "qreg a[2];\nqreg b[2];\ncx a,b[0];\n");
    REQUIRE(c.instructions.size() == 2);
    CHECK(c.instructions[0].qubits == std::vector<QubitId>{0, 2});
    CHECK(c.instructions[1].qubits == std::vector<QubitId>{1, 2});
  }
  SUBCASE("measure register to register") {
    Circuit c = parse_ok(std::string(kHeader) +
                         "qreg q[2];\ncreg c[2];\nmeasure q -> c;\n");
    REQUIRE(c.instructions.size() == 2);
    CHECK(c.instructions[1].qubits[0] == 1);
    CHECK(c.instructions[1].clbits[0] == 1);
  }
  SUBCASE("mismatched register sizes are an error") {
    parse_fail(std::string(kHeader) + "qreg a[2];\nqreg b[3];\ncx a,b;\n");
  }
  SUBCASE("barrier over registers is one instruction") {
    Circuit c = parse_ok(std::string(kHeader) + "qreg q[3];\nbarrier q;\n");
    REQUIRE(c.instructions.size() == 1);
    CHECK(c.instructions[0].kind == OpKind::Barrier);
    CHECK(c.instructions[0].qubits.size() == 3);
  }
}

TEST_CASE("gate definitions are inlined at application") {
  std::string text = std::string(kHeader) + R"(
gate majority a,b,c
{
  cx c,b;
  cx c,a;
  ccx a,b,c;
}
gate rot(theta) t { rz(theta) t; rz(theta/2) t; }
qreg q[3];
majority q[0],q[1],q[2];
rot(pi) q[0];
)";
  Circuit c = parse_ok(text);
  REQUIRE(c.instructions.size() == 5);
  CHECK(c.instructions[0].name == "cx");
  CHECK(c.instructions[0].qubits == std::vector<QubitId>{2, 1});
  CHECK(c.instructions[2].name == "ccx");
  CHECK(c.instructions[3].name == "rz");
  CHECK(c.instructions[3].params[0] == doctest::Approx(3.14159265358979));
  CHECK(c.instructions[4].params[0] == doctest::Approx(3.14159265358979 / 2));
}

TEST_CASE("built-in U and CX are canonicalized") {
  Circuit c = parse_ok(std::string(kHeader) +
                       "qreg q[2];\nU(0.1,0.2,0.3) q[0];\nCX q[0],q[1];\n");
  REQUIRE(c.instructions.size() == 2);
  CHECK(c.instructions[0].name == "u3");
  CHECK(c.instructions[1].name == "cx");
}

TEST_CASE("gate bodies are checked at definition time") {
  // Unknown gate inside a body fails even if the gate is never applied.
  parse_fail(std::string(kHeader) + "gate bad a { zz a; }\nqreg q[1];\n");
  // Operands must be formal arguments.
  parse_fail(std::string(kHeader) + "qreg q[1];\ngate bad a { h q; }\n");
  // Recursive definitions cannot resolve.
  parse_fail(std::string(kHeader) + "gate loop a { loop a; }\nqreg q[1];\n");
}

TEST_CASE("opaque gates are carried through") {
  std::string text = std::string(kHeader) +
                     "opaque ent4 a,b,c,d;\nqreg q[4];\nent4 q[0],q[1],q[2],q[3];\n";
  Circuit c = parse_ok(text);
  REQUIRE(c.opaque_decls.size() == 1);
  CHECK(c.opaque_decls[0].name == "ent4");
  CHECK(c.opaque_decls[0].num_qubits == 4);
  REQUIRE(c.instructions.size() == 1);
  CHECK(c.instructions[0].name == "ent4");
}

TEST_CASE("multiple registers flatten with stable offsets") {
  std::string text = std::string(kHeader) +
                     "qreg a[2];\nqreg b[3];\ncreg m[1];\ncreg n[2];\n"
                     "x b[0];\nmeasure b[2] -> n[1];\n";
  Circuit c = parse_ok(text);
  CHECK(c.num_qubits == 5);
  CHECK(c.num_clbits == 3);
  CHECK(c.instructions[0].qubits[0] == 2);   // b[0] sits after a[0..1]
  CHECK(c.instructions[1].qubits[0] == 4);   // b[2]
  CHECK(c.instructions[1].clbits[0] == 2);   // n[1] sits after m[0]
}

TEST_CASE("diagnostics carry usable positions") {
  SUBCASE("undeclared register") {
    Diagnostic d = parse_fail(std::string(kHeader) + "qreg q[2];\nh r[0];\n");
    CHECK(d.line == 4);
  }
  SUBCASE("index out of range") {
    Diagnostic d = parse_fail(std::string(kHeader) + "qreg q[2];\nh q[2];\n");
    CHECK(d.line == 4);
  }
  SUBCASE("duplicate operands") {
    parse_fail(std::string(kHeader) + "qreg q[2];\ncx q[0],q[0];\n");
  }
  SUBCASE("wrong arity") {
    parse_fail(std::string(kHeader) + "qreg q[2];\ncx q[0];\n");
  }
  SUBCASE("name collision") {
    parse_fail("OPENQASM 2.0;\nqreg q[2];\ncreg q[2];\n");
  }
  SUBCASE("zero-size register") {
    parse_fail("OPENQASM 2.0;\nqreg q[0];\n");
  }
}

TEST_CASE("emit then parse is a fixpoint") {
  std::mt19937_64 rng(3);
  std::vector<Circuit> corpus;
  corpus.push_back(gen_bv(SecretString::from_string("110101")));
  corpus.push_back(gen_ghz(6));
  corpus.push_back(gen_entangled_block(4));
  for (int i = 0; i < 10; ++i) corpus.push_back(gen_random(4, 25, rng(), 0.5));

  for (const Circuit& c : corpus) {
    std::string text1 = emit_qasm(c);
    Circuit back = parse_ok(text1);
    std::string text2 = emit_qasm(back);
    CHECK(text1 == text2);
    CHECK(back.num_qubits == c.num_qubits);
    CHECK(back.instructions.size() == c.instructions.size());
  }
}

TEST_CASE("emitted text uses canonical statement forms") {
  Circuit c;
  c.num_qubits = 2;
  c.num_clbits = 1;
  Instruction rz;
  rz.name = "rz";
  rz.params = {0.5};
  rz.qubits = {0};
  c.instructions.push_back(rz);
  Instruction reset;
  reset.kind = OpKind::Reset;
  reset.name = "reset";
  reset.qubits = {1};
  c.instructions.push_back(reset);
  Instruction m;
  m.kind = OpKind::Measure;
  m.name = "measure";
  m.qubits = {1};
  m.clbits = {0};
  c.instructions.push_back(m);

  std::string text = emit_qasm(c);
  CHECK(text.find("OPENQASM 2.0;\n") == 0);
  CHECK(text.find("qreg q[2];\n") != std::string::npos);
  CHECK(text.find("creg c[1];\n") != std::string::npos);
  CHECK(text.find("rz(0.5) q[0];\n") != std::string::npos);
  CHECK(text.find("reset q[1];\n") != std::string::npos);
  CHECK(text.find("measure q[1] -> c[0];\n") != std::string::npos);
  // Reset order is preserved relative to the measure.
  CHECK(text.find("reset q[1];") < text.find("measure q[1]"));
}

TEST_CASE("parameters survive a round trip exactly") {
  Circuit c;
  c.num_qubits = 1;
  for (double v : {1.0 / 3.0, 0.1, 2.718281828459045, 1e-17, -0.0, 12345.675}) {
    Instruction rz;
    rz.name = "rz";
    rz.params = {v};
    rz.qubits = {0};
    c.instructions.push_back(rz);
  }
  Circuit back = parse_ok(emit_qasm(c));
  REQUIRE(back.instructions.size() == c.instructions.size());
  for (std::size_t i = 0; i < c.instructions.size(); ++i)
    CHECK(back.instructions[i].params[0] == c.instructions[i].params[0]);
}
