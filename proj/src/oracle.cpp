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

#include "qreuse/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qreuse {
namespace {

constexpr std::uint64_t kDefaultBudget = 2'000'000;
constexpr std::size_t kInstructionGuard = 24;

struct Search {
  // Filtered instruction table (Barrier excluded).
  std::vector<std::uint32_t> instr_index;               // position -> original index
  std::vector<std::vector<QubitId>> ops;                 // operand qubits
  std::vector<std::uint64_t> pred_mask;                  // wire predecessors
  std::vector<std::uint32_t> wire_len;                   // per qubit
  std::size_t m = 0;

  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  std::uint32_t proven_lb = 1;
  std::uint32_t upper = 0;

  // Per-attempt state.
  std::uint32_t width_cap = 0;
  std::vector<std::uint32_t> progress;                   // scheduled ops per qubit
  std::uint32_t live = 0;
  std::unordered_set<std::uint64_t> infeasible;          // prefixes that cannot finish
  std::vector<std::uint32_t> order;

  bool dfs(std::uint64_t mask, std::size_t done) {
    if (done == m) return true;
    if (infeasible.count(mask)) return false;
    if (++nodes > budget)
      throw std::runtime_error(
          "oracle: node budget exhausted; best bound so far: min_width in [" +
          std::to_string(proven_lb) + ", " + std::to_string(upper) + "]");

    for (std::size_t k = 0; k < m; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (mask & bit) continue;
      if ((mask & pred_mask[k]) != pred_mask[k]) continue;

      // Slots needed while this instruction runs: everything already resident
      // plus operands not yet started. Operands that finished earlier can't
      // occur (this instruction would still be on their wire).
      std::uint32_t fresh = 0;
      for (QubitId q : ops[k])
        if (progress[q] == 0) ++fresh;
      if (live + fresh > width_cap) continue;

      for (QubitId q : ops[k]) {
        if (progress[q] == 0) ++live;
        if (++progress[q] == wire_len[q]) --live;  // operand retires
      }
      order.push_back(static_cast<std::uint32_t>(k));
      if (dfs(mask | bit, done + 1)) return true;
      order.pop_back();
      for (QubitId q : ops[k]) {
        if (progress[q] == wire_len[q]) ++live;
        if (--progress[q] == 0) --live;
      }
    }
    infeasible.insert(mask);
    return false;
  }
};

}  // namespace

OracleResult min_width_oracle(const Circuit& c, const OracleOptions& opts) {
  Search s;
  s.wire_len.resize(c.num_qubits, 0);
  std::vector<std::uint64_t> last_on_wire(c.num_qubits, UINT64_MAX);
  for (std::uint32_t i = 0; i < c.instructions.size(); ++i) {
    const Instruction& in = c.instructions[i];
    if (in.kind == OpKind::Barrier) continue;
    const std::size_t k = s.instr_index.size();
    s.instr_index.push_back(i);
    s.ops.push_back(in.qubits);
    std::uint64_t preds = 0;
    for (QubitId q : in.qubits) {
      if (q < c.num_qubits) {
        if (last_on_wire[q] != UINT64_MAX)
          preds |= std::uint64_t{1} << last_on_wire[q];
        last_on_wire[q] = k;
        ++s.wire_len[q];
      }
    }
    s.pred_mask.push_back(preds);
  }
  s.m = s.instr_index.size();

  if (s.m > 63)
    throw std::runtime_error("oracle: " + std::to_string(s.m) +
                             " instructions exceeds the exhaustive-search "
                             "representation limit (63)");
  if (s.m > kInstructionGuard && opts.node_budget == 0)
    throw std::runtime_error(
        "oracle: " + std::to_string(s.m) + " instructions exceeds the " +
        std::to_string(kInstructionGuard) +
        "-instruction default limit; raise node_budget to search anyway");
  s.budget = opts.node_budget == 0 ? kDefaultBudget : opts.node_budget;

  OracleResult result;
  if (s.m == 0) {
    result.min_width = 1;  // nothing runs; a single slot trivially suffices
    return result;
  }

  std::uint32_t lb = 1;
  for (const auto& operands : s.ops)
    lb = std::max(lb, static_cast<std::uint32_t>(operands.size()));
  s.upper = c.num_qubits;

  s.progress.assign(c.num_qubits, 0);
  for (std::uint32_t w = lb; w <= c.num_qubits; ++w) {
    s.width_cap = w;
    s.proven_lb = w;  // every smaller width already failed
    s.infeasible.clear();
    s.order.clear();
    if (s.dfs(0, 0)) {
      result.min_width = w;
      result.witness_order.reserve(s.m);
      for (std::uint32_t k : s.order)
        result.witness_order.push_back(s.instr_index[k]);
      result.nodes_explored = s.nodes;
      return result;
    }
  }
  // Unreachable: scheduling everything in program order never needs more
  // than num_qubits slots.
  throw std::runtime_error("oracle: search failed to find any schedule");
}

}  // namespace qreuse
