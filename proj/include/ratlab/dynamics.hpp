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

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratlab/bitstring.hpp"
#include "ratlab/qubo.hpp"
#include "ratlab/sample_set.hpp"
#include "ratlab/schedule.hpp"

namespace ratlab {

// Tabulated annealing amplitudes on a monotone s grid, linearly interpolated.
struct AmplitudeTable {
  std::vector<double> s;
  std::vector<double> a;
  std::vector<double> b;
};

// CSV with header "s,A,B".
AmplitudeTable parse_amplitude_csv(std::string_view text);
AmplitudeTable load_amplitude_csv(const std::string& path);

// H(t) = A(s) H_0 + B(s) H_1 with H_0 = -sum_k X_k. The default amplitude
// family is linear: A = energy_scale (1 - s), B = energy_scale s. A table,
// when set, is scaled by energy_scale as well. Physical time is schedule time
// times time_scale. With `autoscale` the problem Hamiltonian is divided by its
// largest |h| or |J| before evolution.
struct DriverSpec {
  double energy_scale = 1.0;
  double time_scale = 1.0;
  bool autoscale = true;
  std::optional<AmplitudeTable> table;
};

struct Amplitudes {
  double a = 0.0;
  double b = 0.0;
};

Amplitudes amplitudes(const DriverSpec& driver, double s);

// Throws unless A(0) > 0, B(1) > 0, A decreasing and B increasing.
void validate(const DriverSpec& driver);

// Integration controls. Steps are sized so that
//   time_scale * dt * (max A + max B * local_norm) <= max_phase,
// local_norm being the largest single-spin |h_k| + sum_j |J_kj| of the
// (scaled) problem. order 2 is Strang splitting, order 4 its triple-jump
// composition.
struct StepControl {
  double max_phase = 0.05;
  int order = 4;
  double norm_tolerance = 1e-6;
  int qubit_cap = 24;
};

using StateVector = Eigen::VectorXcd;

StateVector uniform_superposition(int num_qubits);
StateVector basis_state(const Bitstring& bits);

struct Evolution {
  StateVector state;     // renormalized once at the end
  double norm_drift = 0.0;
  std::size_t steps = 0;
};

// Time-dependent Schroedinger evolution along `schedule`. The schedule only
// needs increasing times from 0 and s in [0, 1]; shape is not checked.
Evolution evolve(const IsingModel& ising, const AnnealSchedule& schedule,
                 const StateVector& initial, const DriverSpec& driver,
                 const StepControl& control = {});

Eigen::VectorXd probabilities(const StateVector& state);

// Final measurement distribution of one anneal.
struct Distribution {
  Eigen::VectorXd probabilities;
  double norm_drift = 0.0;
  std::size_t steps = 0;
};

Distribution forward_distribution(const QuboModel& model, double total_time,
                                  const DriverSpec& driver,
                                  const StepControl& control = {});

// Starts in the basis state of `initial_bits`. Every read restarting from the
// same classical state (reinitialize semantics) is the same deterministic
// evolution, so one distribution serves all reads.
Distribution reverse_distribution(const QuboModel& model, const Bitstring& initial_bits,
                                  const AnnealSchedule& schedule,
                                  const DriverSpec& driver,
                                  const StepControl& control = {});

// i.i.d. reads from a basis-state distribution.
SampleSet sample_distribution(const QuboModel& model, const Eigen::VectorXd& probs,
                              int reads, std::uint64_t seed,
                              std::string backend = "statevector");

// <H_problem> under a distribution, in model energy units.
double expected_energy(const QuboModel& model, const Eigen::VectorXd& probs);

SampleSet forward_anneal(const QuboModel& model, double total_time, int reads,
                         const DriverSpec& driver, std::uint64_t seed,
                         const StepControl& control = {});

SampleSet reverse_anneal(const QuboModel& model, const Bitstring& initial_bits,
                         const AnnealSchedule& schedule, int reads,
                         const DriverSpec& driver, std::uint64_t seed,
                         const StepControl& control = {});

}  // namespace ratlab
