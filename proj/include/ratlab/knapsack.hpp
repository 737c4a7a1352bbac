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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ratlab/bitstring.hpp"

namespace ratlab {

struct Item {
  int value = 1;   // profit
  int weight = 1;

  auto operator<=>(const Item&) const = default;
};

// Provenance of a derived instance. Empty for parents.
struct Lineage {
  std::optional<std::string> parent;
  std::optional<std::string> category;
  std::optional<double> fraction;

  bool operator==(const Lineage&) const = default;
};

struct KnapsackInstance {
  std::string name;
  std::vector<Item> items;
  int capacity = 1;
  Lineage lineage;

  std::size_t item_count() const { return items.size(); }
  int total_value() const;
  int total_weight() const;

  bool operator==(const KnapsackInstance&) const = default;
};

// Throws Error(data) unless items are non-empty with positive values and
// weights and 1 <= capacity <= total weight.
void validate(const KnapsackInstance& instance);

// Number of binary slack variables for a capacity: floor(log2(capacity)) + 1.
int slack_bit_count(int capacity);

// Bounded binary slack coefficients: 1, 2, ..., 2^(s-2), then the remainder
// capacity - (2^(s-1) - 1). Every integer in [0, capacity] is representable.
std::vector<int> slack_coefficients(int capacity);

// Canonical slack assignment encoding `residual` (0 <= residual <= capacity).
Bitstring slack_encoding(int capacity, int residual);

// Default penalty weight 1 + sum of values: one unit of constraint violation
// costs more than any achievable profit.
double default_penalty(const KnapsackInstance& instance);

// Diagonal QUBO coefficient of an item: -v + M*w^2 - 2*M*W*w.
double linear_impact(const KnapsackInstance& instance, double penalty,
                     std::size_t item_index);

struct Selection {
  std::vector<std::size_t> chosen;
  int total_value = 0;
  int total_weight = 0;
  bool feasible = true;
};

// Reads the item bits of a full model bitstring; slack bits are ignored.
Selection decode(const KnapsackInstance& instance, const Bitstring& x);

// Full model bitstring for an item selection with the canonical slack for the
// remaining capacity (all-ones slack residual is clamped at zero if the
// selection is infeasible).
Bitstring canonical_bitstring(const KnapsackInstance& instance,
                              const Bitstring& item_bits);

}  // namespace ratlab
