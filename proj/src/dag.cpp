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

#include "qreuse/dag.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace qreuse {

GateDag build_dag(const Circuit& c) {
  GateDag dag;
  dag.num_qubits = c.num_qubits;
  dag.wires.resize(c.num_qubits);

  dag.op_offsets.push_back(0);
  dag.pred_offsets.push_back(0);

  std::vector<std::uint32_t> scratch;  // dedup buffer for one node's preds
  for (std::uint32_t idx = 0; idx < c.instructions.size(); ++idx) {
    const Instruction& in = c.instructions[idx];
    if (in.kind == OpKind::Barrier) continue;

    const auto node = static_cast<std::uint32_t>(dag.node_instr.size());
    dag.node_instr.push_back(idx);

    scratch.clear();
    for (QubitId q : in.qubits) {
      dag.op_data.push_back(q);
      if (!dag.wires[q].empty()) {
        std::uint32_t p = dag.wires[q].back();
        if (std::find(scratch.begin(), scratch.end(), p) == scratch.end())
          scratch.push_back(p);
      }
      dag.wires[q].push_back(node);
    }
    dag.op_offsets.push_back(static_cast<std::uint32_t>(dag.op_data.size()));
    dag.pred_data.insert(dag.pred_data.end(), scratch.begin(), scratch.end());
    dag.pred_offsets.push_back(static_cast<std::uint32_t>(dag.pred_data.size()));
  }
  return dag;
}

DependencyTable dependency_table(const GateDag& dag) {
  DependencyTable table;
  table.lists.resize(dag.num_qubits);
  table.counts.resize(dag.num_qubits);

  // Epoch-stamped membership marks avoid clearing arrays between owners.
  std::vector<std::uint32_t> node_mark(dag.size(), 0);
  std::vector<std::uint32_t> qubit_mark(dag.num_qubits, 0);
  std::uint32_t epoch = 0;

  for (QubitId q = 0; q < dag.num_qubits; ++q) {
    DependencyList& list = table.lists[q];
    list.owner = q;
    list.members.push_back(q);
    table.counts[q] = static_cast<std::uint32_t>(dag.wires[q].size());
    if (dag.wires[q].empty()) continue;

    ++epoch;
    qubit_mark[q] = epoch;
    std::uint32_t last = dag.wires[q].back();
    node_mark[last] = epoch;
    std::uint32_t remaining = 1;

    // Every predecessor has a smaller node id, so one descending sweep from
    // the owner's final instruction visits the whole ancestor closure in
    // reverse program order — the order that defines member positions.
    for (std::uint32_t id = last + 1; id-- > 0 && remaining > 0;) {
      if (node_mark[id] != epoch) continue;
      --remaining;
      for (QubitId m : dag.operands(id)) {
        if (qubit_mark[m] != epoch) {
          qubit_mark[m] = epoch;
          list.members.push_back(m);
        }
      }
      for (std::uint32_t p : dag.preds(id)) {
        if (node_mark[p] != epoch) {
          node_mark[p] = epoch;
          ++remaining;
        }
      }
    }
  }
  return table;
}

DependencyTable dependency_table_with_override(const GateDag& dag,
                                               const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("dependency override: ") + e.what());
  }
  if (!doc.is_object())
    throw std::runtime_error("dependency override: top level must be an object");

  DependencyTable table = dependency_table(dag);
  std::vector<bool> seen(dag.num_qubits, false);

  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::size_t pos = 0;
    unsigned long owner = 0;
    try {
      owner = std::stoul(it.key(), &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != it.key().size() || owner >= dag.num_qubits)
      throw std::runtime_error("dependency override: bad qubit key '" +
                               it.key() + "'");
    if (seen[owner])
      throw std::runtime_error("dependency override: duplicate entry for qubit " +
                               std::to_string(owner));
    seen[owner] = true;

    if (!it.value().is_array() || it.value().empty())
      throw std::runtime_error("dependency override: entry for qubit " +
                               std::to_string(owner) +
                               " must be a non-empty array");
    std::vector<QubitId> members;
    std::vector<bool> dup(dag.num_qubits, false);
    for (const auto& v : it.value()) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= dag.num_qubits)
        throw std::runtime_error("dependency override: member out of range for qubit " +
                                 std::to_string(owner));
      auto m = v.get<QubitId>();
      if (dup[m])
        throw std::runtime_error("dependency override: duplicate member " +
                                 std::to_string(m) + " for qubit " +
                                 std::to_string(owner));
      dup[m] = true;
      members.push_back(m);
    }
    if (members.front() != owner)
      throw std::runtime_error("dependency override: list for qubit " +
                               std::to_string(owner) +
                               " must start with its owner");
    table.lists[owner].members = std::move(members);
  }

  for (QubitId q = 0; q < dag.num_qubits; ++q)
    if (!seen[q])
      throw std::runtime_error("dependency override: missing entry for qubit " +
                               std::to_string(q));
  return table;
}

std::vector<std::vector<QubitId>> sorted_llist(const DependencyTable& table) {
  std::vector<std::vector<QubitId>> out;
  out.reserve(table.lists.size());
  for (const DependencyList& l : table.lists) out.push_back(l.members);
  // Input order is ascending owner index; stable sort keeps it as the
  // tie-break.
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

bool is_resizable(const DependencyTable& table, std::uint32_t num_qubits) {
  for (const DependencyList& l : table.lists)
    if (l.members.size() < num_qubits) return true;
  return false;
}

}  // namespace qreuse
