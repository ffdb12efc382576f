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

#include "qreuse/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace qreuse {
namespace {

using Amp = std::complex<double>;
using State = std::vector<Amp>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;

struct Mat2 {
  Amp m00, m01, m10, m11;
};

Mat2 single_qubit_matrix(const std::string& name,
                         const std::vector<double>& p) {
  auto ei = [](double a) { return std::polar(1.0, a); };
  if (name == "u1" || name == "p") return {1, 0, 0, ei(p[0])};
  if (name == "u2")
    return {kInvSqrt2, -ei(p[1]) * kInvSqrt2, ei(p[0]) * kInvSqrt2,
            ei(p[0] + p[1]) * kInvSqrt2};
  if (name == "u3" || name == "u") {
    double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
    return {c, -ei(p[2]) * s, ei(p[1]) * s, ei(p[1] + p[2]) * c};
  }
  if (name == "rx") {
    double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
    return {c, Amp(0, -s), Amp(0, -s), c};
  }
  if (name == "ry") {
    double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
    return {c, -s, s, c};
  }
  if (name == "rz") return {ei(-p[0] / 2), 0, 0, ei(p[0] / 2)};
  if (name == "h") return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
  if (name == "x") return {0, 1, 1, 0};
  if (name == "y") return {0, Amp(0, -1), Amp(0, 1), 0};
  if (name == "z") return {1, 0, 0, -1};
  if (name == "s") return {1, 0, 0, Amp(0, 1)};
  if (name == "sdg") return {1, 0, 0, Amp(0, -1)};
  if (name == "t") return {1, 0, 0, ei(kPi / 4)};
  if (name == "tdg") return {1, 0, 0, ei(-kPi / 4)};
  if (name == "sx")
    return {Amp(0.5, 0.5), Amp(0.5, -0.5), Amp(0.5, -0.5), Amp(0.5, 0.5)};
  if (name == "id") return {1, 0, 0, 1};
  throw std::runtime_error("cannot simulate gate '" + name + "'");
}

void apply_single(State& v, std::uint32_t q, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i & bit) continue;
    Amp a0 = v[i], a1 = v[i | bit];
    v[i] = m.m00 * a0 + m.m01 * a1;
    v[i | bit] = m.m10 * a0 + m.m11 * a1;
  }
}

void apply_gate(State& v, const Instruction& in) {
  const auto bit = [](QubitId q) { return std::size_t{1} << q; };
  if (in.name == "cx") {
    const std::size_t cb = bit(in.qubits[0]), tb = bit(in.qubits[1]);
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((i & cb) && !(i & tb)) std::swap(v[i], v[i | tb]);
    return;
  }
  if (in.name == "cz") {
    const std::size_t cb = bit(in.qubits[0]), tb = bit(in.qubits[1]);
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((i & cb) && (i & tb)) v[i] = -v[i];
    return;
  }
  if (in.name == "swap") {
    const std::size_t ab = bit(in.qubits[0]), bb = bit(in.qubits[1]);
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((i & ab) && !(i & bb)) std::swap(v[i], v[(i & ~ab) | bb]);
    return;
  }
  if (in.name == "ccx") {
    const std::size_t c0 = bit(in.qubits[0]), c1 = bit(in.qubits[1]),
                      tb = bit(in.qubits[2]);
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((i & c0) && (i & c1) && !(i & tb)) std::swap(v[i], v[i | tb]);
    return;
  }
  if (in.name == "id") return;
  apply_single(v, in.qubits[0], single_qubit_matrix(in.name, in.params));
}

double prob_one(const State& v, std::uint32_t q) {
  const std::size_t bit = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i & bit) p += std::norm(v[i]);
  return p;
}

// Keep amplitudes consistent with outcome b at qubit q, renormalized; when
// clear_to_zero, the surviving component is relocated to the qubit's |0>
// subspace (the reset channel).
void project(State& v, std::uint32_t q, int b, double p, bool clear_to_zero) {
  const std::size_t bit = std::size_t{1} << q;
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool hit = ((i & bit) != 0) == (b == 1);
    if (!hit) {
      v[i] = 0.0;
      continue;
    }
    v[i] *= scale;
    if (clear_to_zero && b == 1) {
      v[i & ~bit] = v[i];
      v[i] = 0.0;
    }
  }
}

class BranchRunner {
 public:
  BranchRunner(const Circuit& c, const SimOptions& opts) : c_(c), opts_(opts) {
    dist_.num_clbits = c.num_clbits;
    dist_.branches = 1;
  }

  OutcomeDistribution run() {
    State init(std::size_t{1} << c_.num_qubits, Amp(0));
    init[0] = 1.0;
    std::string clbits(c_.num_clbits, '0');
    descend(std::move(init), 1.0, clbits, 0);
    // Drop keys whose accumulated mass is itself below threshold.
    for (auto it = dist_.probs.begin(); it != dist_.probs.end();)
      it = it->second < opts_.prune_threshold ? dist_.probs.erase(it) : ++it;
    return std::move(dist_);
  }

 private:
  void descend(State state, double weight, std::string clbits, std::size_t ip) {
    for (; ip < c_.instructions.size(); ++ip) {
      const Instruction& in = c_.instructions[ip];
      switch (in.kind) {
        case OpKind::Barrier:
          continue;
        case OpKind::Gate:
          apply_gate(state, in);
          continue;
        case OpKind::Measure:
        case OpKind::Reset: {
          const std::uint32_t q = in.qubits[0];
          const bool is_reset = in.kind == OpKind::Reset;
          const double p1 = prob_one(state, q);
          const double p0 = 1.0 - p1;
          const bool keep0 = weight * p0 >= opts_.prune_threshold;
          const bool keep1 = weight * p1 >= opts_.prune_threshold;
          if (keep0 && keep1) {
            if (++dist_.branches > opts_.max_branches)
              throw std::runtime_error(
                  "branch budget exceeded (" +
                  std::to_string(opts_.max_branches) + ")");
            State copy = state;
            project(copy, q, 0, p0, is_reset);
            std::string cl0 = clbits;
            if (!is_reset) set_clbit(cl0, in.clbits[0], 0);
            descend(std::move(copy), weight * p0, std::move(cl0), ip + 1);
            project(state, q, 1, p1, is_reset);
            if (!is_reset) set_clbit(clbits, in.clbits[0], 1);
            weight *= p1;
            continue;
          }
          if (keep0) {
            project(state, q, 0, p0, is_reset);
            if (!is_reset) set_clbit(clbits, in.clbits[0], 0);
            weight *= p0;
            continue;
          }
          if (keep1) {
            project(state, q, 1, p1, is_reset);
            if (!is_reset) set_clbit(clbits, in.clbits[0], 1);
            weight *= p1;
            continue;
          }
          return;  // whole branch below threshold
        }
      }
    }
    dist_.probs[clbits] += weight;
  }

  void set_clbit(std::string& bits, ClbitId b, int value) {
    bits[bits.size() - 1 - b] = value ? '1' : '0';
  }

  const Circuit& c_;
  SimOptions opts_;
  OutcomeDistribution dist_;
};

}  // namespace

OutcomeDistribution simulate(const Circuit& c, const SimOptions& opts) {
  if (c.num_qubits > 14)
    throw std::runtime_error("simulate: " + std::to_string(c.num_qubits) +
                             " qubits exceeds the 14-qubit limit");
  auto violations = validate(c);
  if (!violations.empty())
    throw std::runtime_error("simulate: malformed circuit: " + violations.front());
  for (const Instruction& in : c.instructions)
    if (in.kind == OpKind::Gate && !standard_gate(in.name))
      throw std::runtime_error("simulate: cannot simulate opaque gate '" +
                               in.name + "'");
  return BranchRunner(c, opts).run();
}

EquivalenceReport check_equivalence(const Circuit& a, const Circuit& b,
                                    double tolerance) {
  if (a.num_clbits != b.num_clbits)
    throw std::runtime_error("check_equivalence: clbit counts differ (" +
                             std::to_string(a.num_clbits) + " vs " +
                             std::to_string(b.num_clbits) + ")");
  OutcomeDistribution da = simulate(a);
  OutcomeDistribution db = simulate(b);

  double tvd = 0.0;
  for (const auto& [key, pa] : da.probs) {
    auto it = db.probs.find(key);
    tvd += std::abs(pa - (it == db.probs.end() ? 0.0 : it->second));
  }
  for (const auto& [key, pb] : db.probs)
    if (!da.probs.count(key)) tvd += pb;
  tvd *= 0.5;

  EquivalenceReport rep;
  rep.tvd = tvd;
  rep.tolerance = tolerance;
  rep.equivalent = tvd < tolerance;
  rep.branches_a = da.branches;
  rep.branches_b = db.branches;
  return rep;
}

double compute_pst(const OutcomeDistribution& dist,
                   const std::set<std::string>& correct_outcomes) {
  if (correct_outcomes.empty())
    throw std::runtime_error("compute_pst: empty correct-outcome set");
  double mass = 0.0;
  for (const std::string& key : correct_outcomes) {
    auto it = dist.probs.find(key);
    if (it != dist.probs.end()) mass += it->second;
  }
  return mass;
}

std::map<std::string, std::uint64_t> sample_counts(
    const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed) {
  std::vector<std::pair<double, const std::string*>> cumulative;
  cumulative.reserve(dist.probs.size());
  double acc = 0.0;
  for (const auto& [key, p] : dist.probs) {
    acc += p;
    cumulative.emplace_back(acc, &key);
  }
  std::map<std::string, std::uint64_t> counts;
  if (cumulative.empty()) return counts;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::lower_bound(
        cumulative.begin(), cumulative.end(), r,
        [](const auto& entry, double v) { return entry.first <= v; });
    if (it == cumulative.end()) --it;
    ++counts[*it->second];
  }
  return counts;
}

}  // namespace qreuse
