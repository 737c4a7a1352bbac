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

#include <cmath>
#include <set>

#include "doctest.h"
#include "ratlab/error.hpp"
#include "ratlab/experiment.hpp"
#include "ratlab/family.hpp"
#include "support/helpers.hpp"

using namespace ratlab;

namespace {

BackendConfig sa_backend(int sweeps = 50) {
  BackendConfig b;
  b.kind = BackendKind::sa;
  b.sa_sweeps = sweeps;
  return b;
}

std::vector<KnapsackInstance> small_family() {
  auto parent = gen_parent(6, 3);
  std::vector<KnapsackInstance> all{parent};
  for (auto& d : gen_family(parent)) all.push_back(d);
  return all;
}

}  // namespace

TEST_CASE("run statistics") {
  const std::vector<double> v = {-12421, -12421, -12419};
  const RunStats s = run_stats(v);
  CHECK(s.best == -12421);
  CHECK(s.avg == doctest::Approx(-12420.33).epsilon(1e-6));
  CHECK(s.std == doctest::Approx(0.943).epsilon(1e-3));
  CHECK_THROWS_AS(run_stats(std::span<const double>{}), Error);
  CHECK(std::isnan(TransferRecord{}.stats.avg));
}

TEST_CASE("backend names") {
  CHECK(parse_backend("sa") == BackendKind::sa);
  CHECK(to_string(BackendKind::statevector) == "statevector");
  CHECK_THROWS_AS(parse_backend("qpu"), Error);
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hit(97, 0);
  parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i]++; });
  for (int h : hit) CHECK(h == 1);
}

TEST_CASE("baseline campaign") {
  const auto instances = small_family();
  const auto records = run_baseline(instances, sa_backend(), 3, 20, 102.75, 9);
  REQUIRE(records.size() == 17);
  int with_closeness = 0;
  for (const auto& r : records) {
    CHECK(r.run_bests.size() == 3);
    CHECK(r.best_energy == *std::min_element(r.run_bests.begin(), r.run_bests.end()));
    CHECK(r.total_time == 102.75);
    if (r.closeness) {
      ++with_closeness;
      CHECK(r.closeness->hamming.total == r.closeness->hamming.items + r.closeness->hamming.slack);
    }
    CHECK(r.optimum_energy.has_value());
    CHECK(r.best_energy >= *r.optimum_energy - 1e-9);
  }
  CHECK(with_closeness == 16);
  CHECK_FALSE(records.front().closeness.has_value());

  const auto again = run_baseline(instances, sa_backend(), 3, 20, 102.75, 9, 3);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].run_bests == again[i].run_bests);
    CHECK(records[i].best == again[i].best);
  }
}

TEST_CASE("transfer campaign") {
  const auto target = gen_parent(6, 3);
  const QuboModel m = build_qubo(target);
  const auto opt = solve_exact(target);
  const auto schedule = make_reverse(0.5, 2.5, 100.0, 0.25);
  std::vector<TransferSource> sources = {{"own", opt.bitstring},
                                         {"wrong", Bitstring(3)},
                                         {"zeros", Bitstring(static_cast<std::size_t>(m.num_vars()))}};
  const auto recs = run_transfer(target, sources, schedule, sa_backend(), 4, 30, 5);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].is_control());
  CHECK(recs[0].source == "--");
  CHECK(recs[1].source == "own");
  CHECK(recs[2].skipped.has_value());
  CHECK(recs[2].run_bests.empty());
  for (const auto& r : recs) {
    if (r.skipped) continue;
    CHECK(r.run_bests.size() == 4);
    const RunStats s = run_stats(r.run_bests);
    CHECK(r.stats.best == s.best);
    CHECK(r.stats.avg == s.avg);
    CHECK(r.stats.std == s.std);
    CHECK(r.schedule == format_schedule(schedule));
  }

  const auto near = make_reverse(0.9999, 0.01, 0.0, 0.01);
  for (auto kind : {BackendKind::sa, BackendKind::statevector}) {
    BackendConfig b = sa_backend();
    b.kind = kind;
    const auto fixed = run_transfer(target, {{"own", opt.bitstring}}, near, b, 5, 50, 1);
    for (double e : fixed[1].run_bests) CHECK(e == doctest::Approx(opt.energy));
  }
}

TEST_CASE("schedule sweep") {
  const auto target = gen_parent(5, 8);
  const auto grid = default_sweep_grid();
  CHECK(grid.size() == 25);
  std::set<std::string> distinct;
  for (const auto& g : grid) {
    distinct.insert(format_schedule(g));
    CHECK(validate(g).empty());
  }
  CHECK(distinct.size() == 25);
  CHECK(std::count(distinct.begin(), distinct.end(),
                   "[(0.0, 1.0), (2.5, 0.5), (102.5, 0.5), (102.75, 1.0)]") == 1);

  const auto one = schedule_sweep(target, {grid[0]}, 3, 10, sa_backend(), 4);
  CHECK(one.size() == 1);

  AnnealSchedule broken{{{0.0, 1.0}, {1.0, 1.5}, {2.0, 1.0}}, ScheduleKind::reverse};
  const auto a = schedule_sweep(target, {grid[0], broken, grid[7], grid[24]}, 3, 10, sa_backend(), 4);
  const auto b = schedule_sweep(target, {grid[0], broken, grid[7], grid[24]}, 3, 10, sa_backend(), 4, 2);
  REQUIRE(a.size() == 4);
  CHECK(a.back().excluded.has_value());
  for (std::size_t i = 0; i + 2 < a.size(); ++i) {
    CHECK((a[i].stats.avg < a[i + 1].stats.avg ||
           (a[i].stats.avg == a[i + 1].stats.avg && a[i].stats.std <= a[i + 1].stats.std)));
  }
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].run_bests == b[i].run_bests);
}

TEST_CASE("fairness") {
  CampaignConfig cfg;
  cfg.backend = sa_backend(20);
  cfg.runs = 2;
  cfg.reads = 10;
  const auto result = run_campaign(small_family(), cfg);
  CHECK(result.baseline.size() == 17);
  CHECK(result.transfers.size() == 17);
  CHECK(fair_time(result, cfg.schedule));
  CHECK_FALSE(fair_time(result, make_reverse(0.5, 1.0, 1.0, 1.0)));
}
