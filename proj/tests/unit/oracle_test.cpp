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

#include <random>

#include "doctest.h"
#include "ratlab/error.hpp"
#include "ratlab/oracle.hpp"
#include "ratlab/qubo.hpp"
#include "support/helpers.hpp"

using namespace ratlab;
using testing::make_instance;

TEST_CASE("solve_exact small cases") {
  const auto fits = solve_exact(make_instance({{3, 2}}, 2));
  CHECK(fits.items.to_string() == "1");
  CHECK(fits.profit == 3);
  CHECK(fits.energy == doctest::Approx(-3.0));

  const auto none = solve_exact(make_instance({{3, 2}}, 1));
  CHECK(none.items.to_string() == "0");
  CHECK(none.profit == 0);
  CHECK(none.energy == doctest::Approx(0.0));

  // two equally good single picks: the lexicographically smallest string is "01"
  const auto tie = solve_exact(make_instance({{2, 2}, {2, 2}}, 2));
  CHECK(tie.items.to_string() == "01");

  std::vector<oracle::Item> many(27, {1, 1});
  CHECK_THROWS_AS(solve_exact(make_instance(many, 3)), Error);
}

TEST_CASE("solve_exact agrees with dynamic programming") {
  std::mt19937 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 20;
    const auto inst = testing::random_instance(gen, n);
    const auto sol = solve_exact(inst);
    REQUIRE(sol.profit == oracle::dp_knapsack(testing::items_of(inst), inst.capacity));
    REQUIRE(sol.weight <= inst.capacity);
    REQUIRE(decode(inst, sol.bitstring).total_value == sol.profit);
  }
  std::mt19937 gen12(12);
  const auto inst = testing::random_instance(gen12, 12);
  CHECK(solve_exact(inst).profit == oracle::dp_knapsack(testing::items_of(inst), inst.capacity));
}

TEST_CASE("ground states") {
  const GroundStates zero = qubo_ground_states(QuboModel::zero(3));
  CHECK(zero.energy == 0.0);
  CHECK(zero.count == 8);
  CHECK_FALSE(zero.truncated);
  const GroundStates capped = qubo_ground_states(QuboModel::zero(3), 4);
  CHECK(capped.count == 8);
  CHECK(capped.truncated);
  CHECK(capped.states.size() == 4);
  CHECK(capped.canonical().to_string() == "000");

  const GroundStates toy = qubo_ground_states(build_qubo(make_instance({{3, 2}}, 2)));
  CHECK(toy.energy == doctest::Approx(-3.0));
  CHECK(toy.count == 1);
  CHECK(toy.canonical().to_string() == "100");

  std::mt19937 gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::random_instance(gen, 1 + trial % 10);
    const auto gs = qubo_ground_states(build_qubo(inst));
    REQUIRE(gs.energy == doctest::Approx(-solve_exact(inst).profit));
  }
  CHECK_THROWS_AS(qubo_ground_states(QuboModel::zero(25)), Error);
}

TEST_CASE("hamming decomposition") {
  const auto a = Bitstring::parse("10110");
  const auto b = Bitstring::parse("11010");
  CHECK(hamming_decompose(a, a, 2) == Hamming{0, 0, 0});
  CHECK(hamming_decompose(a, b, 2) == Hamming{2, 1, 1});
  CHECK_THROWS_AS(hamming_decompose(a, Bitstring::parse("1"), 1), Error);
  CHECK_THROWS_AS(hamming_decompose(a, b, 6), Error);

  std::mt19937 gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = Bitstring::from_index(gen() & 0x3FF, 10);
    const auto y = Bitstring::from_index(gen() & 0x3FF, 10);
    const auto z = Bitstring::from_index(gen() & 0x3FF, 10);
    const auto hxy = hamming_decompose(x, y, 6);
    REQUIRE(hxy == hamming_decompose(y, x, 6));
    REQUIRE(hxy.total == hxy.items + hxy.slack);
    REQUIRE(hxy.total <= hamming_decompose(x, z, 6).total + hamming_decompose(z, y, 6).total);
  }
  CHECK(min_hamming_to_set(a, {b, a}, 2).total == 0);
}

TEST_CASE("cross energy") {
  std::mt19937 gen(6);
  const auto target = testing::random_instance(gen, 8);
  const QuboModel m = build_qubo(target);
  const auto gs = qubo_ground_states(m);
  CHECK(cross_energy(m, gs.canonical(), gs.energy).gap == doctest::Approx(0.0));
  const Eigen::VectorXd table = energy_table(m);
  for (Eigen::Index k = 0; k < table.size(); k += 7) {
    const auto x = Bitstring::from_index(static_cast<std::uint64_t>(k),
                                         static_cast<std::size_t>(m.num_vars()));
    const auto c = cross_energy(m, x, gs.energy);
    REQUIRE(c.gap >= 0.0);
    const bool ground = std::find(gs.states.begin(), gs.states.end(), x) != gs.states.end();
    REQUIRE((c.gap < 1e-9) == ground);
  }
  CHECK_THROWS_AS(cross_energy(m, Bitstring(3), 0.0), Error);

  const auto report = closeness(m, gs.canonical(), gs.energy, gs.canonical());
  CHECK(report.hamming == Hamming{});
  CHECK(report.energy_gap == doctest::Approx(0.0));
}
