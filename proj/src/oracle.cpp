// Copyright 2026 The ratlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratlab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "ratlab/error.hpp"

namespace ratlab {

namespace {

// Bitstring order compares position 0 first, which is bit 0 of the index.
bool index_lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const int pos = std::countr_zero(diff);
  return ((a >> pos) & 1U) == 0;
}

}  // namespace

OptimalSolution solve_exact(const KnapsackInstance& instance) {
  validate(instance);
  const std::size_t n = instance.items.size();
  require(n <= kMaxExactItems, ErrorKind::size,
          "solve_exact is limited to " + std::to_string(kMaxExactItems) + " items");

  // Gray-code walk: one item toggles per step.
  std::uint64_t mask = 0;
  long value = 0;
  long weight = 0;
  std::uint64_t best_mask = 0;
  long best_value = 0;
  long best_weight = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int bit = std::countr_zero(step);
    const auto& item = instance.items[static_cast<std::size_t>(bit)];
    mask ^= std::uint64_t{1} << bit;
    const long sign = ((mask >> bit) & 1U) ? 1 : -1;
    value += sign * item.value;
    weight += sign * item.weight;
    if (weight > instance.capacity) continue;
    if (value > best_value || (value == best_value && index_lex_less(mask, best_mask))) {
      best_value = value;
      best_weight = weight;
      best_mask = mask;
    }
  }

  OptimalSolution out;
  out.items = Bitstring::from_index(best_mask, n);
  out.bitstring = canonical_bitstring(instance, out.items);
  out.profit = static_cast<int>(best_value);
  out.weight = static_cast<int>(best_weight);
  out.energy = energy(build_qubo(instance), out.bitstring);
  return out;
}

GroundStates qubo_ground_states(const QuboModel& model, std::size_t cap) {
  const Eigen::Index n = model.num_vars();
  require(n <= kMaxEnumeratedVars, ErrorKind::size,
          "qubo_ground_states is limited to " + std::to_string(kMaxEnumeratedVars) +
              " variables");
  const Eigen::VectorXd table = energy_table(model);
  constexpr double kTol = 1e-9;
  const double min_energy = table.minCoeff();

  GroundStates out;
  out.energy = min_energy;
  std::vector<std::uint64_t> hits;
  for (Eigen::Index idx = 0; idx < table.size(); ++idx) {
    if (table[idx] <= min_energy + kTol) {
      ++out.count;
      hits.push_back(static_cast<std::uint64_t>(idx));
    }
  }
  std::sort(hits.begin(), hits.end(), index_lex_less);
  out.truncated = hits.size() > cap;
  if (out.truncated) hits.resize(cap);
  out.states.reserve(hits.size());
  for (auto idx : hits) {
    out.states.push_back(Bitstring::from_index(idx, static_cast<std::size_t>(n)));
  }
  return out;
}

Hamming hamming_decompose(const Bitstring& a, const Bitstring& b,
                          std::size_t item_count) {
  require(a.size() == b.size(), ErrorKind::dimension,
          "hamming distance needs equal lengths");
  require(item_count <= a.size(), ErrorKind::invalid_argument,
          "item count exceeds bitstring length");
  Hamming h;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    ++h.total;
    if (i < item_count) {
      ++h.items;
    } else {
      ++h.slack;
    }
  }
  return h;
}

Hamming min_hamming_to_set(const Bitstring& x, const std::vector<Bitstring>& set,
                           std::size_t item_count) {
  require(!set.empty(), ErrorKind::invalid_argument, "empty reference set");
  Hamming best = hamming_decompose(x, set.front(), item_count);
  for (const auto& y : set) {
    const Hamming h = hamming_decompose(x, y, item_count);
    if (h.total < best.total) best = h;
  }
  return best;
}

CrossEnergy cross_energy(const QuboModel& target, const Bitstring& source_best,
                         double target_best_energy) {
  require(static_cast<Eigen::Index>(source_best.size()) == target.num_vars(),
          ErrorKind::dimension,
          "incompatible instances: source solution has " +
              std::to_string(source_best.size()) + " variables, target model " +
              std::to_string(target.num_vars()));
  CrossEnergy out;
  out.energy = energy(target, source_best);
  out.gap = out.energy - target_best_energy;
  return out;
}

ClosenessReport closeness(const QuboModel& target, const Bitstring& target_best,
                          double target_best_energy, const Bitstring& source_best) {
  const CrossEnergy cross = cross_energy(target, source_best, target_best_energy);
  ClosenessReport out;
  out.hamming = hamming_decompose(source_best, target_best,
                                  static_cast<std::size_t>(target.item_count));
  out.energy_cross = cross.energy;
  out.energy_gap = cross.gap;
  return out;
}

}  // namespace ratlab
