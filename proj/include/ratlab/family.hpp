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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ratlab/knapsack.hpp"

namespace ratlab {

enum class Direction { L2L, L2H, H2L, H2H };

// Descendant category: which end of the impact ordering is modified (L2*/H2*)
// and which way the picked items move (*2L/*2H). The fraction is held in
// tenths so that k = round(fraction * n) is exact integer arithmetic.
class Category {
 public:
  Category(Direction direction, int tenths);

  // Accepts only 0.2, 0.4, 0.6, 0.8.
  static Category from_fraction(Direction direction, double fraction);

  Direction direction() const { return direction_; }
  int tenths() const { return tenths_; }
  double fraction() const { return tenths_ / 10.0; }

  // Items to modify among n: round(fraction * n), halves rounded up.
  std::size_t modified_count(std::size_t n) const;

  std::string direction_name() const;
  std::string fraction_label() const;  // "0.2"

  bool operator==(const Category&) const = default;

 private:
  Direction direction_;
  int tenths_;
};

Direction parse_direction(const std::string& text);
std::string to_string(Direction direction);

// All 16 categories, fraction-major in the order 0.2..0.8 x L2L,L2H,H2L,H2H.
std::vector<Category> all_categories();

struct ImpactEntry {
  Item item;
  double impact = 0.0;
};

// Distinct item tuples of an instance sorted ascending by impact, ties by
// (value, weight).
using ImpactTable = std::vector<ImpactEntry>;

// Random parent: n items with value and weight uniform over {1..4},
// capacity floor(sum w / 2). Named "s<n>".
KnapsackInstance gen_parent(std::size_t n, std::uint64_t seed);

ImpactTable unique_items_with_impact(const KnapsackInstance& parent);

struct Derivation {
  KnapsackInstance instance;
  std::size_t requested = 0;  // k
  std::size_t modified = 0;   // min(k, pool size)
  bool truncated = false;     // pool smaller than k
};

// Copies the parent and moves the k picked items one step along the parent's
// impact table. Items whose tuple is the table minimum or maximum are never
// picked. All replacements use the parent's table.
Derivation derive_descendant(const KnapsackInstance& parent,
                             const Category& category);

// Descendant name "<parent>_<fraction>_<direction>", e.g. "s14_0.2_L2L".
std::string descendant_name(const std::string& parent, const Category& category);

// The 16 descendants in all_categories() order.
std::vector<KnapsackInstance> gen_family(const KnapsackInstance& parent);

}  // namespace ratlab
