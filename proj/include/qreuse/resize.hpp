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
#include <string>
#include <vector>

#include "qreuse/circuit.hpp"
#include "qreuse/dag.hpp"

namespace qreuse {

// One residency of a logical qubit on a physical slot. load_pos/release_pos
// are instruction indices into the resized circuit (first and last operation
// of the tenant); both are -1 for a tenant with no operations at all.
// reset_inserted marks that a Reset was added immediately before load_pos.
struct Tenancy {
  QubitId logical = 0;
  std::uint32_t slot = 0;
  std::int64_t load_pos = -1;
  std::int64_t release_pos = -1;
  bool reset_inserted = false;

  bool operator==(const Tenancy&) const = default;
};

struct ResizePlan {
  Circuit resized;
  std::uint32_t original_width = 0;
  std::uint32_t width = 0;
  bool resizable = false;
  std::vector<Tenancy> tenancies;           // in assignment order
  std::uint32_t resets_added = 0;
  std::vector<std::uint32_t> inserted_reset_positions;  // audit trail
  GateCounts counts_before;
  GateCounts counts_after;
  std::vector<std::string> warnings;
};

// Greedy slot-reuse rewrite. Repeatedly pops the shortest dependency list,
// places its members on the lowest-index free slots (growing the slot table
// only when none is free), then emits every instruction whose operands are
// all resident and whose wire predecessors are already emitted. A slot frees
// when its tenant's remaining-operation count hits zero; a Reset is inserted
// lazily before the next tenant's first operation. Barriers are dropped with
// a warning. Non-resizable circuits pass through instruction-identical with
// resizable=false.
//
// Throws std::runtime_error when the table does not cover the circuit's
// qubits exactly, or on an internal scheduling deadlock (invariant breach).
ResizePlan resize(const Circuit& c, const DependencyTable& table);

// JSON report: original_width, width, resizable, resets_added, tenancies,
// gate counts before/after, inserted reset positions, warnings.
std::string plan_report(const ResizePlan& plan);

}  // namespace qreuse
