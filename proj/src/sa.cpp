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

#include "ratlab/sa.hpp"

#include <cmath>

#include "ratlab/error.hpp"

namespace ratlab {

void validate(const SaParams& params) {
  require(params.sweeps >= 1, ErrorKind::invalid_argument, "sweeps must be >= 1");
  require(params.reads >= 1, ErrorKind::invalid_argument, "reads must be >= 1");
  require(params.beta_hot > 0.0 && params.beta_cold > params.beta_hot,
          ErrorKind::invalid_argument, "need beta_cold > beta_hot > 0");
}

Bitstring run_metropolis(const QuboModel& model, Bitstring state,
                         const std::vector<double>& betas, Rng& rng) {
  const Eigen::Index n = model.num_vars();
  require(static_cast<Eigen::Index>(state.size()) == n, ErrorKind::dimension,
          "initial bitstring length does not match the model");
  const Eigen::MatrixXd upper = model.quadratic.triangularView<Eigen::StrictlyUpper>();
  const Eigen::MatrixXd coupling = upper + upper.transpose();

  // field[k]: energy change of setting x_k from 0 to 1 given the others
  Eigen::VectorXd field = model.linear + coupling * state.to_vector();
  for (double beta : betas) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const std::size_t ku = static_cast<std::size_t>(k);
      const double delta = state[ku] ? -field[k] : field[k];
      if (delta > 0.0 && rng.uniform() >= std::exp(-beta * delta)) continue;
      const double sign = state[ku] ? -1.0 : 1.0;
      state.flip(ku);
      field += sign * coupling.col(k);
    }
  }
  return state;
}

std::vector<double> geometric_betas(const SaParams& params) {
  validate(params);
  std::vector<double> betas(static_cast<std::size_t>(params.sweeps));
  if (params.sweeps == 1) {
    betas[0] = params.beta_cold;
    return betas;
  }
  const double ratio = params.beta_cold / params.beta_hot;
  for (int k = 0; k < params.sweeps; ++k) {
    betas[static_cast<std::size_t>(k)] =
        params.beta_hot * std::pow(ratio, static_cast<double>(k) / (params.sweeps - 1));
  }
  return betas;
}

std::vector<double> schedule_betas(const AnnealSchedule& schedule, const SaParams& params) {
  validate(params);
  const double total = schedule.duration();
  std::vector<double> betas(static_cast<std::size_t>(params.sweeps));
  for (int k = 0; k < params.sweeps; ++k) {
    const double t = params.sweeps == 1
                         ? total
                         : total * static_cast<double>(k) / (params.sweeps - 1);
    const double s = s_at(schedule, std::min(t, total));
    betas[static_cast<std::size_t>(k)] =
        params.beta_hot + (params.beta_cold - params.beta_hot) * s;
  }
  return betas;
}

SampleSet sa_forward(const QuboModel& model, const SaParams& params) {
  const auto betas = geometric_betas(params);
  const auto n = static_cast<std::size_t>(model.num_vars());
  std::vector<Bitstring> finals;
  finals.reserve(static_cast<std::size_t>(params.reads));
  for (int r = 0; r < params.reads; ++r) {
    Rng rng(derive_seed(params.seed, {"sa"}, static_cast<std::uint64_t>(r)));
    Bitstring start(n);
    for (std::size_t i = 0; i < n; ++i) start.set(i, rng.uniform() < 0.5);
    finals.push_back(run_metropolis(model, std::move(start), betas, rng));
  }
  return aggregate_reads(model, finals, "sa", params.seed);
}

SampleSet sa_reverse(const QuboModel& model, const Bitstring& initial_bits,
                     const AnnealSchedule& schedule, const SaParams& params) {
  require(schedule.kind == ScheduleKind::reverse && validate(schedule).empty(),
          ErrorKind::invalid_argument, "sa_reverse needs a valid reverse schedule");
  require(static_cast<Eigen::Index>(initial_bits.size()) == model.num_vars(),
          ErrorKind::dimension, "initial bitstring length does not match the model");
  const auto betas = schedule_betas(schedule, params);
  std::vector<Bitstring> finals;
  finals.reserve(static_cast<std::size_t>(params.reads));
  for (int r = 0; r < params.reads; ++r) {
    Rng rng(derive_seed(params.seed, {"sa"}, static_cast<std::uint64_t>(r)));
    finals.push_back(run_metropolis(model, initial_bits, betas, rng));
  }
  return aggregate_reads(model, finals, "sa", params.seed);
}

}  // namespace ratlab
