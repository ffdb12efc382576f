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
#include <string_view>
#include <vector>

#include "qreuse/circuit.hpp"

namespace qreuse {

// Hidden bitstring for the Bernstein-Vazirani family, written in the same
// big-endian display convention as outcome keys: the rightmost character of
// the text form is bit 0, so measuring the generated circuit reproduces the
// text form verbatim.
struct SecretString {
  std::vector<bool> bits;  // bits[i] couples data qubit i to the ancilla

  static SecretString from_string(std::string_view text);  // '0'/'1' only
  std::string to_string() const;
  std::size_t popcount() const;
};

// len+1 qubits, data qubits 0..len-1 and the ancilla last: x,h on the
// ancilla; h layer on data; cx(data_i, ancilla) per set bit in index order;
// closing h layer on data; measure data_i -> c_i. The ancilla is never
// measured.
Circuit gen_bv(const SecretString& secret);

// h on qubit 0, cx chain down the line, measure everything.
Circuit gen_ghz(std::uint32_t n);
Circuit gen_cat(std::uint32_t n);

// One opaque k-qubit gate ("ent<k>") across all qubits, then measures — fully
// entangled, so no schedule needs fewer than k slots.
Circuit gen_entangled_block(std::uint32_t k);

// m instructions from a seeded stream: a cx on a random ordered pair with
// probability two_qubit_fraction (single-qubit circuits always fall through),
// otherwise one of {h, x, rz(theta)} with theta uniform in [0, 2pi); then
// terminal measures on every qubit. Byte-deterministic per argument tuple
// across platforms.
Circuit gen_random(std::uint32_t n, std::uint32_t m, std::uint64_t seed,
                   double two_qubit_fraction);

// Width-2-reducible stress shape: ancilla prep, h layer, per-data-qubit
// t-gate padding chains sized so the total instruction count lands on m
// (when m allows), all-ones cx layer, closing h layer, data measures.
Circuit gen_scaling(std::uint32_t n, std::uint64_t m);

}  // namespace qreuse
