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
#include "ratlab/qubo.hpp"
#include "ratlab/rng.hpp"
#include "ratlab/sample_set.hpp"
#include "ratlab/schedule.hpp"

namespace ratlab {

// Metropolis sampler settings. Inverse temperatures are in model energy units.
struct SaParams {
  int sweeps = 1000;
  double beta_hot = 0.001;
  double beta_cold = 10.0;
  int reads = 100;
  std::uint64_t seed = 0;
};

void validate(const SaParams& params);

// One single-bit-flip Metropolis sweep (variables in index order) per entry
// of `betas`, starting from `state`. Returns the final state.
Bitstring run_metropolis(const QuboModel& model, Bitstring state,
                         const std::vector<double>& betas, Rng& rng);

// Geometric ramp beta_hot -> beta_cold over `sweeps` sweeps.
std::vector<double> geometric_betas(const SaParams& params);

// Reverse trajectory beta(t) = beta_hot + (beta_cold - beta_hot) s(t) at
// `sweeps` evenly spaced times covering [0, T].
std::vector<double> schedule_betas(const AnnealSchedule& schedule, const SaParams& params);

// Each read starts from a uniformly random state. Read r uses the seed
// derive_seed(params.seed, {"sa"}, r), so reads are order-independent.
SampleSet sa_forward(const QuboModel& model, const SaParams& params);

// Each read restarts from `initial_bits`.
SampleSet sa_reverse(const QuboModel& model, const Bitstring& initial_bits,
                     const AnnealSchedule& schedule, const SaParams& params);

}  // namespace ratlab
