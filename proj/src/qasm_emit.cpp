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

#include <charconv>
#include <string>

#include "qreuse/qasm.hpp"

namespace qreuse {
namespace {

// Shortest representation that parses back to the same double, so emitted
// text is a reproducible fixpoint.
std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

void append_qubit(std::string& out, QubitId q) {
  out += "q[";
  out += std::to_string(q);
  out += ']';
}

}  // namespace

std::string emit_qasm(const Circuit& c) {
  std::string out;
  out.reserve(64 + c.instructions.size() * 16);
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";

  for (const OpaqueDecl& d : c.opaque_decls) {
    out += "opaque ";
    out += d.name;
    if (d.num_params > 0) {
      out += '(';
      for (std::uint32_t i = 0; i < d.num_params; ++i) {
        if (i) out += ',';
        out += 'p';
        out += std::to_string(i);
      }
      out += ')';
    }
    out += ' ';
    for (std::uint32_t i = 0; i < d.num_qubits; ++i) {
      if (i) out += ',';
      out += 'a';
      out += std::to_string(i);
    }
    out += ";\n";
  }

  out += "qreg q[";
  out += std::to_string(c.num_qubits);
  out += "];\n";
  if (c.num_clbits > 0) {
    out += "creg c[";
    out += std::to_string(c.num_clbits);
    out += "];\n";
  }

  for (const Instruction& in : c.instructions) {
    switch (in.kind) {
      case OpKind::Measure:
        out += "measure ";
        append_qubit(out, in.qubits[0]);
        out += " -> c[";
        out += std::to_string(in.clbits[0]);
        out += "];\n";
        break;
      case OpKind::Reset:
        out += "reset ";
        append_qubit(out, in.qubits[0]);
        out += ";\n";
        break;
      case OpKind::Barrier:
        out += "barrier ";
        for (std::size_t i = 0; i < in.qubits.size(); ++i) {
          if (i) out += ',';
          append_qubit(out, in.qubits[i]);
        }
        out += ";\n";
        break;
      case OpKind::Gate:
        out += in.name;
        if (!in.params.empty()) {
          out += '(';
          for (std::size_t i = 0; i < in.params.size(); ++i) {
            if (i) out += ',';
            out += format_double(in.params[i]);
          }
          out += ')';
        }
        out += ' ';
        for (std::size_t i = 0; i < in.qubits.size(); ++i) {
          if (i) out += ',';
          append_qubit(out, in.qubits[i]);
        }
        out += ";\n";
        break;
    }
  }
  return out;
}

}  // namespace qreuse
