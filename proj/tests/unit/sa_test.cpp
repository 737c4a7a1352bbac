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
#include <random>

#include "doctest.h"
#include "ratlab/error.hpp"
#include "ratlab/oracle.hpp"
#include "ratlab/sa.hpp"
#include "support/helpers.hpp"

using namespace ratlab;

namespace {

int frequency(const SampleSet& set, const Bitstring& x) {
  for (const auto& r : set.records) {
    if (r.bits == x) return r.count;
  }
  return 0;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(SaParams{10, 1.0, 0.5, 1, 0}), Error);
  CHECK_THROWS_AS(validate(SaParams{0, 0.1, 1.0, 1, 0}), Error);
  CHECK_THROWS_AS(validate(SaParams{10, 0.1, 1.0, 0, 0}), Error);
  CHECK_NOTHROW(validate(SaParams{}));
  const auto betas = geometric_betas(SaParams{5, 0.1, 10.0, 1, 0});
  CHECK(betas.size() == 5);
  CHECK(betas.front() == doctest::Approx(0.1));
  CHECK(betas.back() == doctest::Approx(10.0));
  CHECK(betas[2] == doctest::Approx(1.0));
  const auto sched = schedule_betas(make_reverse(0.5, 1.0, 0.0, 1.0), SaParams{3, 0.0 + 1.0, 3.0, 1, 0});
  CHECK(sched == std::vector<double>{3.0, 2.0, 3.0});
}

TEST_CASE("single variable favours the negative field") {
  QuboModel m = QuboModel::zero(1);
  m.linear(0) = -5.0;
  const SampleSet set = sa_forward(m, SaParams{200, 0.1, 10.0, 2000, 5});
  CHECK(frequency(set, Bitstring::parse("1")) >= 0.99 * 2000);
  CHECK(set.total_reads == 2000);
  CHECK(set.backend == "sa");
}

TEST_CASE("seed determinism") {
  std::mt19937 gen(1);
  const auto inst = testing::random_instance(gen, 6);
  const QuboModel m = build_qubo(inst);
  const SampleSet a = sa_forward(m, SaParams{50, 0.1, 10.0, 64, 77});
  const SampleSet b = sa_forward(m, SaParams{50, 0.1, 10.0, 64, 77});
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].bits == b.records[i].bits);
    CHECK(a.records[i].count == b.records[i].count);
  }
  const auto r = make_reverse(0.5, 2.5, 100.0, 0.25);
  const Bitstring x(static_cast<std::size_t>(m.num_vars()));
  const SampleSet c = sa_reverse(m, x, r, SaParams{50, 0.1, 10.0, 64, 77});
  const SampleSet d = sa_reverse(m, x, r, SaParams{50, 0.1, 10.0, 64, 77});
  CHECK(c.records.size() == d.records.size());
  CHECK(c.lowest().bits == d.lowest().bits);
}

TEST_CASE("forward SA finds the optimum on n = 10") {
  std::mt19937 gen(31);
  int hits = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(gen, 10);
    const QuboModel m = build_qubo(inst);
    const double optimum = -oracle::dp_knapsack(testing::items_of(inst), inst.capacity);
    const SampleSet set = sa_forward(m, SaParams{1000, 0.001, 10.0, 1000, static_cast<std::uint64_t>(trial)});
    if (set.lowest().energy <= optimum + 1e-9) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("shallow reverse dip keeps the initial state") {
  std::mt19937 gen(2);
  const auto inst = testing::random_instance(gen, 8);
  const QuboModel m = build_qubo(inst);
  const Bitstring x = solve_exact(inst).bitstring;
  const SampleSet set =
      sa_reverse(m, x, make_reverse(0.9999, 0.01, 0.0, 0.01), SaParams{100, 0.1, 10.0, 1000, 3});
  CHECK(frequency(set, x) >= 990);
  CHECK_THROWS_AS(sa_reverse(m, x, make_forward(1.0), SaParams{}), Error);
  CHECK_THROWS_AS(sa_reverse(m, Bitstring(3), make_reverse(0.5, 1, 1, 1), SaParams{}), Error);
}

TEST_CASE("deep dip: close starts do at least as well as far starts") {
  std::mt19937 gen(12);
  const auto inst = testing::random_instance(gen, 12);
  const QuboModel m = build_qubo(inst);
  const auto opt = solve_exact(inst);
  const auto dip = make_reverse(0.05, 2.5, 100.0, 0.25);
  auto flipped = [&](int d, std::mt19937& g) {
    Bitstring x = opt.bitstring;
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), g);
    for (int i = 0; i < d; ++i) x.flip(idx[static_cast<std::size_t>(i)]);
    return x;
  };
  double near_rate = 0, far_rate = 0;
  std::mt19937 pick(7);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SaParams p{200, 0.001, 10.0, 200, seed};
    near_rate += frequency(sa_reverse(m, flipped(1, pick), dip, p), opt.bitstring);
    far_rate += frequency(sa_reverse(m, flipped(5, pick), dip, p), opt.bitstring);
  }
  CHECK(near_rate >= far_rate);
}

TEST_CASE("constant temperature reproduces Boltzmann marginals") {
  QuboModel m = QuboModel::zero(2);
  m.linear << 0.3, -0.4;
  m.quadratic(0, 1) = 0.5;
  const double beta = 1.0;
  const std::vector<double> betas(40, beta);
  const int reads = 20000;
  std::vector<int> counts(4, 0);
  for (int r = 0; r < reads; ++r) {
    Rng rng(derive_seed(123, {"boltzmann"}, static_cast<std::uint64_t>(r)));
    Bitstring x(2);
    x.set(0, rng.uniform() < 0.5);
    x.set(1, rng.uniform() < 0.5);
    counts[run_metropolis(m, x, betas, rng).to_index()]++;
  }
  double z = 0;
  std::vector<double> w(4);
  for (std::uint64_t k = 0; k < 4; ++k) {
    w[k] = std::exp(-beta * energy(m, Bitstring::from_index(k, 2)));
    z += w[k];
  }
  for (std::uint64_t k = 0; k < 4; ++k) {
    const double p = w[k] / z;
    const double se = std::sqrt(p * (1 - p) / reads);
    CHECK(std::abs(counts[k] / double(reads) - p) <= 3 * se);
  }
}
