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
#include <map>
#include <set>
#include <string>

#include "qreuse/circuit.hpp"

namespace qreuse {

// Exact distribution over classical outcomes. Keys are bitstrings with clbit
// indices descending left to right (character at position p is clbit
// num_clbits - 1 - p); keys whose probability fell below the pruning
// threshold are absent. branches counts the measurement/reset branches the
// simulation enumerated.
struct OutcomeDistribution {
  std::uint32_t num_clbits = 0;
  std::map<std::string, double> probs;
  std::uint64_t branches = 0;
};

struct SimOptions {
  double prune_threshold = 1e-12;       // drop branches/keys below this mass
  std::uint64_t max_branches = 1u << 20;
};

// Dense statevector simulation with exhaustive branch enumeration: Measure
// splits on both outcomes weighted by Born probabilities, Reset splits the
// same way but discards the outcome and forces the qubit back to |0>.
// Supports at most 14 qubits; opaque gates and over-budget branching raise
// std::runtime_error.
OutcomeDistribution simulate(const Circuit& c, const SimOptions& opts = {});

struct EquivalenceReport {
  double tvd = 0.0;
  double tolerance = 0.0;
  bool equivalent = false;
  std::uint64_t branches_a = 0;
  std::uint64_t branches_b = 0;
};

// Total variation distance between the exact distributions of two circuits,
// 0.5 * sum |P_a - P_b| over the key union. Circuits must agree on
// num_clbits.
EquivalenceReport check_equivalence(const Circuit& a, const Circuit& b,
                                    double tolerance = 1e-9);

// Probability of successful trial: total mass the distribution places on the
// correct outcome set. Throws on an empty set.
double compute_pst(const OutcomeDistribution& dist,
                   const std::set<std::string>& correct_outcomes);

// Convenience shots-style wrapper: k draws from the exact distribution with
// a seeded generator.
std::map<std::string, std::uint64_t> sample_counts(
    const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed);

}  // namespace qreuse
