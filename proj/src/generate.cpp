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

#include "qreuse/generate.hpp"

#include <random>
#include <stdexcept>

namespace qreuse {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

Instruction gate(std::string name, std::vector<QubitId> qubits,
                 std::vector<double> params = {}) {
  Instruction in;
  in.kind = OpKind::Gate;
  in.name = std::move(name);
  in.params = std::move(params);
  in.qubits = std::move(qubits);
  return in;
}

Instruction measure(QubitId q, ClbitId c) {
  Instruction in;
  in.kind = OpKind::Measure;
  in.qubits = {q};
  in.clbits = {c};
  return in;
}

// mt19937_64 output is specified exactly by the standard; keeping the
// value-to-range mapping by hand makes generated circuits byte-identical
// across standard libraries too.
struct Stream {
  std::mt19937_64 rng;
  explicit Stream(std::uint64_t seed) : rng(seed) {}

  std::uint64_t below(std::uint64_t k) { return rng() % k; }
  double unit() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
};

}  // namespace

SecretString SecretString::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("secret string is empty");
  SecretString s;
  s.bits.resize(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("secret string must be binary");
    // Rightmost character is bit 0, matching outcome-key display order.
    s.bits[text.size() - 1 - k] = (ch == '1');
  }
  return s;
}

std::string SecretString::to_string() const {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out[bits.size() - 1 - i] = '1';
  return out;
}

std::size_t SecretString::popcount() const {
  std::size_t n = 0;
  for (bool b : bits) n += b;
  return n;
}

Circuit gen_bv(const SecretString& secret) {
  const auto len = static_cast<std::uint32_t>(secret.bits.size());
  if (len == 0) throw std::invalid_argument("gen_bv: empty secret");
  Circuit c;
  c.num_qubits = len + 1;
  c.num_clbits = len;
  const QubitId anc = len;

  c.instructions.push_back(gate("x", {anc}));
  c.instructions.push_back(gate("h", {anc}));
  for (QubitId i = 0; i < len; ++i) c.instructions.push_back(gate("h", {i}));
  for (QubitId i = 0; i < len; ++i)
    if (secret.bits[i]) c.instructions.push_back(gate("cx", {i, anc}));
  for (QubitId i = 0; i < len; ++i) c.instructions.push_back(gate("h", {i}));
  for (QubitId i = 0; i < len; ++i) c.instructions.push_back(measure(i, i));
  return c;
}

Circuit gen_ghz(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("gen_ghz: need at least one qubit");
  Circuit c;
  c.num_qubits = n;
  c.num_clbits = n;
  c.instructions.push_back(gate("h", {0}));
  for (QubitId i = 0; i + 1 < n; ++i)
    c.instructions.push_back(gate("cx", {i, i + 1}));
  for (QubitId i = 0; i < n; ++i) c.instructions.push_back(measure(i, i));
  return c;
}

Circuit gen_cat(std::uint32_t n) { return gen_ghz(n); }

Circuit gen_entangled_block(std::uint32_t k) {
  if (k == 0)
    throw std::invalid_argument("gen_entangled_block: need at least one qubit");
  Circuit c;
  c.num_qubits = k;
  c.num_clbits = k;
  const std::string name = "ent" + std::to_string(k);
  c.opaque_decls.push_back({name, 0, k});
  Instruction block;
  block.kind = OpKind::Gate;
  block.name = name;
  for (QubitId i = 0; i < k; ++i) block.qubits.push_back(i);
  c.instructions.push_back(std::move(block));
  for (QubitId i = 0; i < k; ++i) c.instructions.push_back(measure(i, i));
  return c;
}

Circuit gen_random(std::uint32_t n, std::uint32_t m, std::uint64_t seed,
                   double two_qubit_fraction) {
  if (n == 0) throw std::invalid_argument("gen_random: need at least one qubit");
  if (two_qubit_fraction < 0.0 || two_qubit_fraction > 1.0)
    throw std::invalid_argument("gen_random: fraction must lie in [0,1]");
  Circuit c;
  c.num_qubits = n;
  c.num_clbits = n;
  Stream stream(seed);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (n >= 2 && stream.unit() < two_qubit_fraction) {
      const auto a = static_cast<QubitId>(stream.below(n));
      auto b = static_cast<QubitId>(stream.below(n - 1));
      if (b >= a) ++b;
      c.instructions.push_back(gate("cx", {a, b}));
      continue;
    }
    const auto q = static_cast<QubitId>(stream.below(n));
    switch (stream.below(3)) {
      case 0: c.instructions.push_back(gate("h", {q})); break;
      case 1: c.instructions.push_back(gate("x", {q})); break;
      default:
        c.instructions.push_back(gate("rz", {q}, {stream.unit() * kTwoPi}));
    }
  }
  for (QubitId q = 0; q < n; ++q) c.instructions.push_back(measure(q, q));
  return c;
}

Circuit gen_scaling(std::uint32_t n, std::uint64_t m) {
  if (n < 2) throw std::invalid_argument("gen_scaling: need at least two qubits");
  Circuit c;
  const std::uint32_t data = n - 1;
  const QubitId anc = data;
  c.num_qubits = n;
  c.num_clbits = data;

  // Fixed skeleton: ancilla prep + per data qubit (h, cx, h, measure).
  const std::uint64_t skeleton = 2 + std::uint64_t{4} * data;
  const std::uint64_t padding = m > skeleton ? m - skeleton : 0;
  const std::uint64_t per_qubit = padding / data;
  const std::uint64_t extra = padding % data;  // first `extra` qubits get one more

  c.instructions.push_back(gate("x", {anc}));
  c.instructions.push_back(gate("h", {anc}));
  for (QubitId i = 0; i < data; ++i) c.instructions.push_back(gate("h", {i}));
  for (QubitId i = 0; i < data; ++i) {
    const std::uint64_t pads = per_qubit + (i < extra ? 1 : 0);
    for (std::uint64_t p = 0; p < pads; ++p)
      c.instructions.push_back(gate("t", {i}));
  }
  for (QubitId i = 0; i < data; ++i)
    c.instructions.push_back(gate("cx", {i, anc}));
  for (QubitId i = 0; i < data; ++i) c.instructions.push_back(gate("h", {i}));
  for (QubitId i = 0; i < data; ++i) c.instructions.push_back(measure(i, i));
  return c;
}

}  // namespace qreuse
