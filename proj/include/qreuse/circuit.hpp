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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qreuse {

using QubitId = std::uint32_t;
using ClbitId = std::uint32_t;

enum class OpKind { Gate, Measure, Reset, Barrier };

// One flat-indexed operation. Gate carries a mnemonic plus evaluated angle
// parameters; Measure pairs one qubit with one clbit; Reset and Barrier touch
// qubits only.
struct Instruction {
  OpKind kind = OpKind::Gate;
  std::string name;  // gate mnemonic, empty for Measure/Reset/Barrier
  std::vector<double> params;
  std::vector<QubitId> qubits;
  std::vector<ClbitId> clbits;

  bool operator==(const Instruction&) const = default;
};

// Declaration of a gate whose body is unknown; applications are carried
// through uninterpreted under this name.
struct OpaqueDecl {
  std::string name;
  std::uint32_t num_params = 0;
  std::uint32_t num_qubits = 0;

  bool operator==(const OpaqueDecl&) const = default;
};

struct Circuit {
  std::uint32_t num_qubits = 0;
  std::uint32_t num_clbits = 0;
  std::vector<OpaqueDecl> opaque_decls;
  std::vector<Instruction> instructions;

  bool operator==(const Circuit&) const = default;
};

struct GateCounts {
  std::size_t total_gates = 0;   // OpKind::Gate instructions (opaque included)
  std::size_t cnot_count = 0;    // gates named "cx"
  std::size_t measure_count = 0;
  std::size_t reset_count = 0;
  std::size_t barrier_count = 0;
  std::size_t depth = 0;  // longest wire path, Barrier excluded

  bool operator==(const GateCounts&) const = default;
};

struct GateSignature {
  std::uint32_t num_params = 0;
  std::uint32_t num_qubits = 0;
};

// Signature of a built-in gate mnemonic, or nullopt if `name` is not one of
// the supported set {u1,u2,u3,u,p,rx,ry,rz,h,x,y,z,s,sdg,t,tdg,sx,cx,cz,
// swap,ccx,id}.
std::optional<GateSignature> standard_gate(std::string_view name);

GateCounts count_gates(const Circuit& c);

// Structural checks: operand indices in range, no duplicate qubits within an
// instruction, kind-specific arities, gate names either standard or opaque-
// declared with matching arity. Returns one message per violation (empty
// means well-formed); messages name the offending instruction index.
std::vector<std::string> validate(const Circuit& c);

inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace qreuse
