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

#include <map>
#include <set>

#include "doctest.h"
#include "ratlab/error.hpp"
#include "ratlab/family.hpp"
#include "support/helpers.hpp"

using namespace ratlab;
using testing::make_instance;

namespace {

KnapsackInstance five_items() {
  auto inst = make_instance({{1, 4}, {2, 3}, {3, 2}, {4, 1}, {4, 4}}, 7, "p");
  return inst;
}

}  // namespace

TEST_CASE("categories") {
  const auto all = all_categories();
  CHECK(all.size() == 16);
  std::map<Direction, int> per_direction;
  for (const auto& c : all) per_direction[c.direction()]++;
  for (const auto& [d, count] : per_direction) CHECK(count == 4);
  CHECK(Category(Direction::L2H, 4).modified_count(5) == 2);
  CHECK(Category(Direction::L2L, 2).modified_count(14) == 3);   // 2.8
  CHECK(Category(Direction::L2L, 4).modified_count(14) == 6);   // 5.6
  CHECK(Category(Direction::L2L, 6).modified_count(14) == 8);   // 8.4
  CHECK(Category(Direction::L2L, 2).modified_count(16) == 3);   // 3.2
  CHECK(Category(Direction::L2L, 4).modified_count(5) == 2);
  CHECK(Category(Direction::L2L, 2).modified_count(5) == 1);
  CHECK(Category(Direction::L2L, 6).modified_count(5) == 3);
  CHECK(Category(Direction::H2H, 8).modified_count(5) == 4);
  CHECK(Category::from_fraction(Direction::H2L, 0.6) == Category(Direction::H2L, 6));
  CHECK_THROWS_AS(Category(Direction::H2L, 3), Error);
  CHECK(parse_direction("H2L") == Direction::H2L);
  CHECK_THROWS_AS(parse_direction("X2Y"), Error);
  CHECK(descendant_name("s14", Category(Direction::L2L, 2)) == "s14_0.2_L2L");
}

TEST_CASE("gen_parent") {
  const auto a = gen_parent(14, 7);
  const auto b = gen_parent(14, 7);
  CHECK(a == b);
  CHECK(a.name == "s14");
  CHECK(a.items.size() == 14);
  CHECK(a.capacity == a.total_weight() / 2);
  CHECK_THROWS_AS(gen_parent(1, 7), Error);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = gen_parent(16, seed);
    for (const auto& it : p.items) {
      REQUIRE(it.value >= 1);
      REQUIRE(it.value <= 4);
      REQUIRE(it.weight >= 1);
      REQUIRE(it.weight <= 4);
    }
  }
  CHECK_FALSE(gen_parent(14, 1) == gen_parent(14, 2));
}

TEST_CASE("impact table") {
  const ImpactTable t = unique_items_with_impact(five_items());
  REQUIRE(t.size() == 5);
  const std::vector<std::pair<Item, double>> expected = {
      {{4, 4}, -604}, {{1, 4}, -601}, {{2, 3}, -497}, {{3, 2}, -363}, {{4, 1}, -199}};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(t[i].item == expected[i].first);
    CHECK(t[i].impact == doctest::Approx(expected[i].second));
  }
  const auto same = make_instance({{2, 2}, {2, 2}, {2, 2}}, 3);
  CHECK(unique_items_with_impact(same).size() == 1);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(unique_items_with_impact(gen_parent(40, seed)).size() <= 16);
  }
}

TEST_CASE("derive descendant") {
  const Derivation d = derive_descendant(five_items(), Category(Direction::L2H, 4));
  CHECK(d.requested == 2);
  CHECK(d.modified == 2);
  CHECK_FALSE(d.truncated);
  const std::vector<Item> want = {{2, 3}, {3, 2}, {3, 2}, {4, 1}, {4, 4}};
  CHECK(d.instance.items == want);
  CHECK(d.instance.capacity == 7);
  CHECK(d.instance.name == "p_0.4_L2H");
  CHECK(d.instance.lineage.parent == std::optional<std::string>("p"));
  CHECK(d.instance.lineage.category == std::optional<std::string>("L2H"));

  // pool is (1,4),(2,3),(3,2); H2L 0.4 picks the two highest and moves them down
  const Derivation h = derive_descendant(five_items(), Category(Direction::H2L, 4));
  const std::vector<Item> want_h = {{1, 4}, {1, 4}, {2, 3}, {4, 1}, {4, 4}};
  CHECK(h.instance.items == want_h);

  // k = 4 exceeds the pool of three
  const Derivation t = derive_descendant(five_items(), Category(Direction::L2L, 8));
  CHECK(t.truncated);
  CHECK(t.modified == 3);

  CHECK_THROWS_AS(derive_descendant(make_instance({{1, 1}, {2, 2}}, 1), Category(Direction::L2L, 2)),
                  Error);
}

TEST_CASE("family invariants") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto parent = gen_parent(14 + 2 * (seed % 2), seed);
    const ImpactTable table = unique_items_with_impact(parent);
    if (table.size() < 3) continue;
    std::set<Item> closure;
    for (const auto& e : table) closure.insert(e.item);
    const auto family = gen_family(parent);
    REQUIRE(family.size() == 16);
    for (std::size_t c = 0; c < 16; ++c) {
      const auto& child = family[c];
      const Category cat = all_categories()[c];
      REQUIRE(child.items.size() == parent.items.size());
      REQUIRE(child.capacity == parent.capacity);
      std::size_t changed = 0;
      for (std::size_t i = 0; i < parent.items.size(); ++i) {
        REQUIRE(closure.count(child.items[i]) == 1);
        const bool extreme = parent.items[i] == table.front().item || parent.items[i] == table.back().item;
        if (extreme) REQUIRE(child.items[i] == parent.items[i]);
        if (child.items[i] != parent.items[i]) ++changed;
      }
      REQUIRE(changed <= cat.modified_count(parent.items.size()));
    }
    REQUIRE(gen_family(parent) == family);
  }
  const auto names = gen_family(gen_parent(14, 1));
  CHECK(std::any_of(names.begin(), names.end(), [](const auto& i) { return i.name == "s14_0.2_L2L"; }));
}
