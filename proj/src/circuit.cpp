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

#include "qreuse/circuit.hpp"

#include <algorithm>
#include <unordered_map>

namespace qreuse {

std::optional<GateSignature> standard_gate(std::string_view name) {
  static const std::unordered_map<std::string_view, GateSignature> table = {
      {"u1", {1, 1}}, {"u2", {2, 1}},  {"u3", {3, 1}}, {"u", {3, 1}},
      {"p", {1, 1}},  {"rx", {1, 1}},  {"ry", {1, 1}}, {"rz", {1, 1}},
      {"h", {0, 1}},  {"x", {0, 1}},   {"y", {0, 1}},  {"z", {0, 1}},
      {"s", {0, 1}},  {"sdg", {0, 1}}, {"t", {0, 1}},  {"tdg", {0, 1}},
      {"sx", {0, 1}}, {"cx", {0, 2}},  {"cz", {0, 2}}, {"swap", {0, 2}},
      {"ccx", {0, 3}}, {"id", {0, 1}},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts out;
  // depth via rolling per-wire layer numbers; equivalent to the longest path
  // in the wire-edge DAG because every edge links consecutive wire positions.
  std::vector<std::size_t> layer(c.num_qubits, 0);
  for (const Instruction& in : c.instructions) {
    switch (in.kind) {
      case OpKind::Gate:
        ++out.total_gates;
        if (in.name == "cx") ++out.cnot_count;
        break;
      case OpKind::Measure: ++out.measure_count; break;
      case OpKind::Reset: ++out.reset_count; break;
      case OpKind::Barrier: ++out.barrier_count; continue;
    }
    std::size_t next = 0;
    for (QubitId q : in.qubits)
      if (q < layer.size()) next = std::max(next, layer[q]);
    ++next;
    for (QubitId q : in.qubits)
      if (q < layer.size()) layer[q] = next;
    out.depth = std::max(out.depth, next);
  }
  return out;
}

namespace {

std::string at(std::size_t idx, const std::string& what) {
  return "instruction " + std::to_string(idx) + ": " + what;
}

}  // namespace

std::vector<std::string> validate(const Circuit& c) {
  std::vector<std::string> bad;
  if (c.num_qubits == 0) bad.push_back("circuit declares no qubits");

  std::unordered_map<std::string_view, const OpaqueDecl*> opaque;
  for (const OpaqueDecl& d : c.opaque_decls) opaque.emplace(d.name, &d);

  for (std::size_t i = 0; i < c.instructions.size(); ++i) {
    const Instruction& in = c.instructions[i];
    if (in.qubits.empty()) bad.push_back(at(i, "no qubit operands"));
    for (QubitId q : in.qubits)
      if (q >= c.num_qubits)
        bad.push_back(at(i, "qubit " + std::to_string(q) + " out of range"));
    for (ClbitId b : in.clbits)
      if (b >= c.num_clbits)
        bad.push_back(at(i, "clbit " + std::to_string(b) + " out of range"));
    for (std::size_t a = 0; a < in.qubits.size(); ++a)
      for (std::size_t b = a + 1; b < in.qubits.size(); ++b)
        if (in.qubits[a] == in.qubits[b]) {
          bad.push_back(at(i, "duplicate qubit operand " +
                                  std::to_string(in.qubits[a])));
          a = in.qubits.size();  // one report per instruction is enough
          break;
        }

    switch (in.kind) {
      case OpKind::Measure:
        if (in.qubits.size() != 1 || in.clbits.size() != 1)
          bad.push_back(at(i, "measure must pair one qubit with one clbit"));
        if (!in.params.empty()) bad.push_back(at(i, "measure takes no params"));
        break;
      case OpKind::Reset:
        if (in.qubits.size() != 1 || !in.clbits.empty())
          bad.push_back(at(i, "reset takes exactly one qubit"));
        if (!in.params.empty()) bad.push_back(at(i, "reset takes no params"));
        break;
      case OpKind::Barrier:
        if (!in.clbits.empty() || !in.params.empty())
          bad.push_back(at(i, "barrier takes qubits only"));
        break;
      case OpKind::Gate: {
        if (!in.clbits.empty())
          bad.push_back(at(i, "gate must not address clbits"));
        if (auto sig = standard_gate(in.name)) {
          if (in.qubits.size() != sig->num_qubits)
            bad.push_back(at(i, in.name + " expects " +
                                    std::to_string(sig->num_qubits) +
                                    " qubit(s)"));
          if (in.params.size() != sig->num_params)
            bad.push_back(at(i, in.name + " expects " +
                                    std::to_string(sig->num_params) +
                                    " parameter(s)"));
        } else if (auto it = opaque.find(in.name); it != opaque.end()) {
          if (in.qubits.size() != it->second->num_qubits)
            bad.push_back(at(i, "opaque " + in.name + " expects " +
                                    std::to_string(it->second->num_qubits) +
                                    " qubit(s)"));
          if (in.params.size() != it->second->num_params)
            bad.push_back(at(i, "opaque " + in.name + " expects " +
                                    std::to_string(it->second->num_params) +
                                    " parameter(s)"));
        } else {
          bad.push_back(at(i, "unknown gate '" + in.name + "'"));
        }
        break;
      }
    }
  }
  return bad;
}

}  // namespace qreuse
