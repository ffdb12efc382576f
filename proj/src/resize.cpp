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

#include "qreuse/resize.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace qreuse {
namespace {

constexpr std::uint32_t kNoSlot = UINT32_MAX;
constexpr std::size_t kNoTenancy = SIZE_MAX;

struct SlotState {
  QubitId occupant = UINT32_MAX;
  bool free = true;
  bool dirty = false;  // hosted at least one emitted instruction
};

}  // namespace

ResizePlan resize(const Circuit& c, const DependencyTable& table) {
  const std::uint32_t n = c.num_qubits;
  if (table.lists.size() != n || table.counts.size() != n)
    throw std::runtime_error("resize: dependency table does not match circuit");
  for (std::uint32_t q = 0; q < n; ++q)
    if (table.lists[q].owner != q)
      throw std::runtime_error("resize: dependency table owner set mismatch");

  ResizePlan plan;
  plan.original_width = n;
  plan.counts_before = count_gates(c);

  if (!is_resizable(table, n)) {
    plan.resized = c;
    plan.width = n;
    plan.resizable = false;
    plan.counts_after = plan.counts_before;
    return plan;
  }
  plan.resizable = true;

  // Working copies: member lists in owner order (construction order is the
  // sort tie-break), per-qubit remaining-operation counts, per-qubit wires.
  std::vector<std::vector<QubitId>> llist;
  llist.reserve(n);
  for (const DependencyList& l : table.lists) llist.push_back(l.members);
  std::vector<std::uint32_t> remaining(table.counts);

  std::vector<std::vector<std::uint32_t>> wires(n);
  std::size_t barriers = 0;
  for (std::uint32_t i = 0; i < c.instructions.size(); ++i) {
    const Instruction& in = c.instructions[i];
    if (in.kind == OpKind::Barrier) {
      ++barriers;
      continue;
    }
    for (QubitId q : in.qubits) wires[q].push_back(i);
  }
  if (barriers > 0)
    plan.warnings.push_back("dropped " + std::to_string(barriers) +
                            " barrier instruction(s); slot reuse reorders "
                            "across them");
  for (std::uint32_t q = 0; q < n; ++q)
    if (wires[q].size() != remaining[q])
      throw std::runtime_error("resize: dependency table counts do not match circuit");

  std::vector<std::uint32_t> cursor(n, 0);     // next unscheduled wire position
  std::vector<std::uint32_t> slot_of(n, kNoSlot);
  std::vector<bool> assigned(n, false);
  std::vector<bool> await_reset(n, false);     // reset pending before first op
  std::vector<std::size_t> tenancy_of(n, kNoTenancy);
  std::vector<SlotState> slots;

  std::vector<std::uint32_t> pending;  // non-Barrier instruction indices, in order
  for (std::uint32_t i = 0; i < c.instructions.size(); ++i)
    if (c.instructions[i].kind != OpKind::Barrier) pending.push_back(i);

  Circuit& out = plan.resized;
  out.num_clbits = c.num_clbits;
  out.opaque_decls = c.opaque_decls;
  out.instructions.reserve(pending.size());

  auto release = [&](QubitId q) {
    SlotState& s = slots[slot_of[q]];
    s.free = true;
    s.occupant = UINT32_MAX;
    slot_of[q] = kNoSlot;
  };

  auto emit = [&](std::uint32_t instr_idx) {
    const Instruction& in = c.instructions[instr_idx];
    // Lazy resets: any operand starting its tenancy on a dirty slot gets the
    // slot wiped right here, in operand order.
    for (QubitId q : in.qubits) {
      if (!await_reset[q]) continue;
      await_reset[q] = false;
      Instruction rst;
      rst.kind = OpKind::Reset;
      rst.qubits.push_back(slot_of[q]);
      plan.inserted_reset_positions.push_back(
          static_cast<std::uint32_t>(out.instructions.size()));
      out.instructions.push_back(std::move(rst));
      ++plan.resets_added;
      plan.tenancies[tenancy_of[q]].reset_inserted = true;
    }
    Instruction mapped = in;
    for (QubitId& q : mapped.qubits) q = slot_of[q];
    const auto pos = static_cast<std::int64_t>(out.instructions.size());
    for (QubitId q : in.qubits) {
      Tenancy& t = plan.tenancies[tenancy_of[q]];
      if (t.load_pos < 0) t.load_pos = pos;
      t.release_pos = pos;
      slots[slot_of[q]].dirty = true;
      ++cursor[q];
      if (--remaining[q] == 0) release(q);
    }
    out.instructions.push_back(std::move(mapped));
  };

  while (!llist.empty()) {
    std::stable_sort(llist.begin(), llist.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<QubitId> chosen = std::move(llist.front());
    llist.erase(llist.begin());

    bool placed_any = false;
    for (QubitId q : chosen) {
      if (assigned[q]) continue;  // defensive; lists are filtered on update
      assigned[q] = true;
      placed_any = true;

      std::uint32_t slot = kNoSlot;
      for (std::uint32_t s = 0; s < slots.size(); ++s)
        if (slots[s].free) { slot = s; break; }
      if (slot == kNoSlot) {
        slot = static_cast<std::uint32_t>(slots.size());
        slots.push_back({});
      }
      slots[slot].free = false;
      slots[slot].occupant = q;
      slot_of[q] = slot;
      tenancy_of[q] = plan.tenancies.size();
      plan.tenancies.push_back({q, slot, -1, -1, false});
      if (slots[slot].dirty) await_reset[q] = true;
      if (remaining[q] == 0) {
        // Idle qubit: occupies a slot for zero instructions and never forces
        // a reset. load/release stay -1.
        await_reset[q] = false;
        release(q);
      }
    }

    // Drop freshly assigned members from every remaining list.
    for (auto& list : llist)
      list.erase(std::remove_if(list.begin(), list.end(),
                                [&](QubitId q) { return assigned[q]; }),
                 list.end());

    if (!placed_any) continue;

    // One forward pass suffices: wire predecessors always sit at smaller
    // indices, so chains unlock within the same sweep.
    std::size_t kept = 0;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      const std::uint32_t idx = pending[k];
      const Instruction& in = c.instructions[idx];
      bool ready = true;
      for (QubitId q : in.qubits) {
        if (slot_of[q] == kNoSlot || wires[q][cursor[q]] != idx) {
          ready = false;
          break;
        }
      }
      if (ready)
        emit(idx);
      else
        pending[kept++] = idx;
    }
    pending.resize(kept);
  }

  if (!pending.empty())
    throw std::runtime_error("resize: internal scheduling deadlock (" +
                             std::to_string(pending.size()) +
                             " instructions unplaced)");

  out.num_qubits = static_cast<std::uint32_t>(slots.size());
  plan.width = out.num_qubits;
  plan.counts_after = count_gates(out);
  return plan;
}

namespace {

nlohmann::json counts_json(const GateCounts& g) {
  return {{"total_gates", g.total_gates},   {"cnot_count", g.cnot_count},
          {"measure_count", g.measure_count}, {"reset_count", g.reset_count},
          {"barrier_count", g.barrier_count}, {"depth", g.depth}};
}

}  // namespace

std::string plan_report(const ResizePlan& plan) {
  nlohmann::json doc;
  doc["original_width"] = plan.original_width;
  doc["width"] = plan.width;
  doc["resizable"] = plan.resizable;
  doc["resets_added"] = plan.resets_added;
  doc["tenancies"] = nlohmann::json::array();
  for (const Tenancy& t : plan.tenancies)
    doc["tenancies"].push_back({{"logical", t.logical},
                                {"slot", t.slot},
                                {"load_pos", t.load_pos},
                                {"release_pos", t.release_pos},
                                {"reset_inserted", t.reset_inserted}});
  doc["inserted_reset_positions"] = plan.inserted_reset_positions;
  doc["gate_counts"] = {{"before", counts_json(plan.counts_before)},
                        {"after", counts_json(plan.counts_after)}};
  doc["warnings"] = plan.warnings;
  return doc.dump(2) + "\n";
}

}  // namespace qreuse
