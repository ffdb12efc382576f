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
#include <span>
#include <string>
#include <vector>

#include "qreuse/circuit.hpp"

namespace qreuse {

// Wire-edge dependency DAG. One node per non-Barrier instruction, in program
// order (so node ids ascend with instruction index and every predecessor has
// a smaller id). Edges connect consecutive instructions on each qubit wire;
// parallel edges between the same pair collapse to one. False and true
// dependencies are not distinguished.
//
// Operand lists and predecessor lists are stored flat (CSR) so million-gate
// circuits stay compact.
struct GateDag {
  std::uint32_t num_qubits = 0;
  std::vector<std::uint32_t> node_instr;            // node id -> instruction index
  std::vector<std::vector<std::uint32_t>> wires;    // qubit -> node ids, in order

  std::vector<std::uint32_t> op_offsets;            // size() + 1
  std::vector<QubitId> op_data;
  std::vector<std::uint32_t> pred_offsets;          // size() + 1
  std::vector<std::uint32_t> pred_data;

  std::size_t size() const { return node_instr.size(); }

  std::span<const QubitId> operands(std::uint32_t node) const {
    return {op_data.data() + op_offsets[node],
            op_data.data() + op_offsets[node + 1]};
  }
  std::span<const std::uint32_t> preds(std::uint32_t node) const {
    return {pred_data.data() + pred_offsets[node],
            pred_data.data() + pred_offsets[node + 1]};
  }
};

GateDag build_dag(const Circuit& c);

// Ordered dependency list of one qubit: the owner first, then every other
// qubit whose operations must complete before the owner can finish, in
// first-encounter order scanning the owner's ancestor closure by descending
// instruction index (within a node, operand order).
struct DependencyList {
  QubitId owner = 0;
  std::vector<QubitId> members;

  bool operator==(const DependencyList&) const = default;
};

struct DependencyTable {
  std::vector<DependencyList> lists;    // indexed by owner
  std::vector<std::uint32_t> counts;    // per-qubit non-Barrier instruction count

  bool operator==(const DependencyTable&) const = default;
};

DependencyTable dependency_table(const GateDag& dag);

// Replace the computed member lists with externally supplied ones, given as a
// JSON object {"<qubit>": [owner, members...], ...}. Counts still come from
// the dag. Throws std::runtime_error on malformed input: non-integer keys,
// out-of-range indices, duplicate members, a list not starting with its
// owner, or a key set that does not cover every qubit exactly once.
DependencyTable dependency_table_with_override(const GateDag& dag,
                                               const std::string& json_text);

// All member lists sorted by ascending length, ties by ascending owner index.
std::vector<std::vector<QubitId>> sorted_llist(const DependencyTable& table);

// A circuit admits fewer slots than qubits iff some dependency list has fewer
// members than the qubit count.
bool is_resizable(const DependencyTable& table, std::uint32_t num_qubits);

}  // namespace qreuse
