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
#include <vector>

#include "qreuse/circuit.hpp"

namespace qreuse {

struct OracleOptions {
  // 0 keeps the default budget and the 24-instruction guard; any explicit
  // value lifts the guard and bounds the search at that many visited states.
  std::uint64_t node_budget = 0;
};

struct OracleResult {
  std::uint32_t min_width = 0;
  std::vector<std::uint32_t> witness_order;  // instruction indices, Barrier excluded
  std::uint64_t nodes_explored = 0;
};

// Exact minimum slot count over all wire-order-respecting schedules, via
// branch-and-bound: for candidate widths ascending from the largest operand
// arity, search topological prefixes depth-first, pruning any step that would
// keep more qubits resident than the candidate allows and memoizing prefixes
// already proven infeasible. A qubit occupies a slot from its first scheduled
// instruction through its last. Exponential by nature — circuits beyond 24
// non-Barrier instructions are rejected unless node_budget is raised; budget
// exhaustion throws, reporting the best bound proven so far.
OracleResult min_width_oracle(const Circuit& c, const OracleOptions& opts = {});

}  // namespace qreuse
