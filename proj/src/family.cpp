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

#include "ratlab/family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ratlab/error.hpp"
#include "ratlab/rng.hpp"

namespace ratlab {

Category::Category(Direction direction, int tenths)
    : direction_(direction), tenths_(tenths) {
  require(tenths == 2 || tenths == 4 || tenths == 6 || tenths == 8,
          ErrorKind::invalid_argument,
          "category fraction must be one of 0.2, 0.4, 0.6, 0.8");
}

Category Category::from_fraction(Direction direction, double fraction) {
  for (int tenths : {2, 4, 6, 8}) {
    if (fraction == tenths / 10.0) return Category(direction, tenths);
  }
  fail(ErrorKind::invalid_argument,
       "category fraction must be one of 0.2, 0.4, 0.6, 0.8");
}

std::size_t Category::modified_count(std::size_t n) const {
  return (static_cast<std::size_t>(tenths_) * n + 5) / 10;
}

std::string Category::direction_name() const { return to_string(direction_); }

std::string Category::fraction_label() const {
  return "0." + std::to_string(tenths_);
}

std::string to_string(Direction direction) {
  switch (direction) {
    case Direction::L2L: return "L2L";
    case Direction::L2H: return "L2H";
    case Direction::H2L: return "H2L";
    case Direction::H2H: return "H2H";
  }
  return "?";
}

Direction parse_direction(const std::string& text) {
  for (auto d : {Direction::L2L, Direction::L2H, Direction::H2L, Direction::H2H}) {
    if (to_string(d) == text) return d;
  }
  fail(ErrorKind::invalid_argument, "unknown direction '" + text + "'");
}

std::vector<Category> all_categories() {
  std::vector<Category> out;
  for (int tenths : {2, 4, 6, 8}) {
    for (auto d : {Direction::L2L, Direction::L2H, Direction::H2L, Direction::H2H}) {
      out.emplace_back(d, tenths);
    }
  }
  return out;
}

KnapsackInstance gen_parent(std::size_t n, std::uint64_t seed) {
  require(n >= 2, ErrorKind::invalid_argument, "parent needs at least 2 items");
  Rng rng(seed);
  KnapsackInstance parent;
  parent.name = "s" + std::to_string(n);
  parent.items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Item item;
    item.value = static_cast<int>(rng.uniform_int(1, 4));
    item.weight = static_cast<int>(rng.uniform_int(1, 4));
    parent.items.push_back(item);
  }
  parent.capacity = parent.total_weight() / 2;
  return parent;
}

ImpactTable unique_items_with_impact(const KnapsackInstance& parent) {
  validate(parent);
  const double penalty = default_penalty(parent);
  ImpactTable table;
  for (std::size_t i = 0; i < parent.items.size(); ++i) {
    const Item& item = parent.items[i];
    const bool seen = std::any_of(table.begin(), table.end(),
                                  [&](const ImpactEntry& e) { return e.item == item; });
    if (!seen) table.push_back({item, linear_impact(parent, penalty, i)});
  }
  std::sort(table.begin(), table.end(), [](const ImpactEntry& a, const ImpactEntry& b) {
    if (a.impact != b.impact) return a.impact < b.impact;
    return a.item < b.item;
  });
  return table;
}

namespace {

std::size_t table_position(const ImpactTable& table, const Item& item) {
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (table[p].item == item) return p;
  }
  fail(ErrorKind::data, "item missing from impact table");
}

}  // namespace

std::string descendant_name(const std::string& parent, const Category& category) {
  return parent + "_" + category.fraction_label() + "_" + category.direction_name();
}

Derivation derive_descendant(const KnapsackInstance& parent,
                             const Category& category) {
  const ImpactTable table = unique_items_with_impact(parent);
  require(table.size() >= 3, ErrorKind::data,
          "instance '" + parent.name +
              "' has fewer than 3 distinct items; no modifiable middle");
  const std::size_t last = table.size() - 1;

  struct Candidate {
    std::size_t index;     // item slot in the parent
    std::size_t position;  // row in the impact table
  };
  std::vector<Candidate> pool;
  for (std::size_t i = 0; i < parent.items.size(); ++i) {
    const std::size_t p = table_position(table, parent.items[i]);
    if (p != 0 && p != last) pool.push_back({i, p});
  }

  const Direction d = category.direction();
  const bool from_low = d == Direction::L2L || d == Direction::L2H;
  const bool to_high = d == Direction::L2H || d == Direction::H2H;

  // pool is in slot order, so a stable sort on impact breaks ties by slot
  std::stable_sort(pool.begin(), pool.end(), [&](const Candidate& a, const Candidate& b) {
    const double ia = table[a.position].impact;
    const double ib = table[b.position].impact;
    return from_low ? ia < ib : ia > ib;
  });

  Derivation out;
  out.requested = category.modified_count(parent.items.size());
  out.modified = std::min(out.requested, pool.size());
  out.truncated = out.requested > pool.size();

  out.instance = parent;
  out.instance.name = descendant_name(parent.name, category);
  out.instance.lineage.parent = parent.name;
  out.instance.lineage.category = category.direction_name();
  out.instance.lineage.fraction = category.fraction();

  for (std::size_t r = 0; r < out.modified; ++r) {
    const Candidate& c = pool[r];
    // pool positions are interior, so both neighbours exist
    const std::size_t target = to_high ? std::min(c.position + 1, last)
                                       : (c.position == 0 ? 0 : c.position - 1);
    out.instance.items[c.index] = table[target].item;
  }
  return out;
}

std::vector<KnapsackInstance> gen_family(const KnapsackInstance& parent) {
  std::vector<KnapsackInstance> family;
  for (const auto& category : all_categories()) {
    family.push_back(derive_descendant(parent, category).instance);
  }
  return family;
}

}  // namespace ratlab
