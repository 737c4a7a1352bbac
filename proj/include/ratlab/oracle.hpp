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

#pragma once

#include <cstdint>
#include <vector>

#include "ratlab/bitstring.hpp"
#include "ratlab/knapsack.hpp"
#include "ratlab/qubo.hpp"

namespace ratlab {

inline constexpr std::size_t kMaxExactItems = 26;
inline constexpr Eigen::Index kMaxEnumeratedVars = 24;
inline constexpr std::size_t kGroundStateCap = std::size_t{1} << 16;

struct OptimalSolution {
  Bitstring items;       // item selection
  Bitstring bitstring;   // items + canonical slack for the residual capacity
  int profit = 0;
  int weight = 0;
  double energy = 0.0;   // under build_qubo(instance) with the default penalty
};

// Exhaustive scan of all 2^n subsets. Among equally profitable feasible
// subsets the lexicographically smallest item bitstring wins.
OptimalSolution solve_exact(const KnapsackInstance& instance);

struct GroundStates {
  double energy = 0.0;
  std::uint64_t count = 0;          // number of minimizing states
  std::vector<Bitstring> states;    // lexicographic order, at most the cap
  bool truncated = false;           // count exceeded the cap

  const Bitstring& canonical() const { return states.front(); }
};

// Exhaustive minimum over all 2^num_vars states; ties within 1e-9.
GroundStates qubo_ground_states(const QuboModel& model,
                                std::size_t cap = kGroundStateCap);

struct Hamming {
  int total = 0;  // h
  int items = 0;  // n_h
  int slack = 0;  // s_h

  bool operator==(const Hamming&) const = default;
};

Hamming hamming_decompose(const Bitstring& a, const Bitstring& b,
                          std::size_t item_count);

// Smallest total distance from `x` to any member of `set`.
Hamming min_hamming_to_set(const Bitstring& x, const std::vector<Bitstring>& set,
                           std::size_t item_count);

struct CrossEnergy {
  double energy = 0.0;  // source solution scored on the target objective
  double gap = 0.0;     // energy - target best energy
};

CrossEnergy cross_energy(const QuboModel& target, const Bitstring& source_best,
                         double target_best_energy);

// Closeness of a source solution to a target's best solution.
struct ClosenessReport {
  Hamming hamming;
  double energy_cross = 0.0;
  double energy_gap = 0.0;
};

ClosenessReport closeness(const QuboModel& target, const Bitstring& target_best,
                          double target_best_energy, const Bitstring& source_best);

}  // namespace ratlab
