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
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratlab/dynamics.hpp"
#include "ratlab/knapsack.hpp"
#include "ratlab/oracle.hpp"
#include "ratlab/sa.hpp"
#include "ratlab/schedule.hpp"

namespace ratlab {

enum class BackendKind { statevector, sa };

std::string to_string(BackendKind kind);
BackendKind parse_backend(const std::string& text);

struct BackendConfig {
  BackendKind kind = BackendKind::statevector;
  DriverSpec driver;
  StepControl step;
  int sa_sweeps = 1000;
  double beta_hot = 0.001;
  double beta_cold = 10.0;
};

// Population statistics (divide by N) of per-run best energies.
// NaN until computed; skipped records keep the NaNs.
struct RunStats {
  double best = std::numeric_limits<double>::quiet_NaN();
  double avg = std::numeric_limits<double>::quiet_NaN();
  double std = std::numeric_limits<double>::quiet_NaN();
};

RunStats run_stats(std::span<const double> run_bests);

// Label used in seeds and tables for the forward-anneal control source.
inline constexpr const char* kControlSource = "--";

struct BaselineRecord {
  std::string instance;
  std::optional<std::string> parent;
  int num_vars = 0;
  int item_count = 0;
  double best_energy = 0.0;
  Bitstring best;
  std::vector<double> run_bests;
  std::optional<ClosenessReport> closeness;  // against the parent's best
  std::optional<double> optimum_energy;       // exact oracle, when enumerable
  double total_time = 0.0;
  std::string backend;
  std::uint64_t master_seed = 0;
  double norm_drift = 0.0;
  std::optional<std::string> error;
};

struct TransferRecord {
  std::string source;  // kControlSource for the forward-anneal control
  std::string target;
  std::vector<double> run_bests;
  RunStats stats;
  std::string schedule;
  std::string backend;
  std::uint64_t master_seed = 0;
  double total_time = 0.0;
  double norm_drift = 0.0;
  std::optional<std::string> skipped;

  bool is_control() const { return source == kControlSource; }
};

// Calls task(i) for i in [0, count) on up to `jobs` threads. Results must be
// written to per-index slots.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

// Forward-anneals every instance `runs` times (reads per run) for total_time,
// then scores each descendant's best against its parent's best. A failing
// instance yields a record with `error` set.
std::vector<BaselineRecord> run_baseline(const std::vector<KnapsackInstance>& instances,
                                         const BackendConfig& backend, int runs, int reads,
                                         double total_time, std::uint64_t master_seed,
                                         int jobs = 1);

struct TransferSource {
  std::string name;
  Bitstring best;
};

// Reverse-anneals the target from each source solution. The first record is
// the forward-anneal control with total time equal to the schedule duration.
std::vector<TransferRecord> run_transfer(const KnapsackInstance& target,
                                         const std::vector<TransferSource>& sources,
                                         const AnnealSchedule& schedule,
                                         const BackendConfig& backend, int runs, int reads,
                                         std::uint64_t master_seed, int jobs = 1);

struct SweepEntry {
  AnnealSchedule schedule;
  std::vector<double> run_bests;
  RunStats stats;
  std::optional<std::string> excluded;
};

// Evaluates each candidate from one random initial state per run (shared
// across candidates). Valid entries are ranked by mean run best, then std;
// excluded candidates follow.
std::vector<SweepEntry> schedule_sweep(const KnapsackInstance& target,
                                       const std::vector<AnnealSchedule>& candidates,
                                       int runs, int reads, const BackendConfig& backend,
                                       std::uint64_t master_seed, int jobs = 1);

// s_p in {0.3..0.7} x t_pause in {0, 25, 50, 75, 100}, t_ramp 2.5, t_quench 0.25.
std::vector<AnnealSchedule> default_sweep_grid();

struct CampaignConfig {
  BackendConfig backend;
  int runs = 10;
  int reads = 1000;
  AnnealSchedule schedule = make_reverse(0.5, 2.5, 100.0, 0.25);
  std::uint64_t master_seed = 0;
  std::string instance_dir;
  int jobs = 1;
};

struct CampaignResult {
  std::vector<BaselineRecord> baseline;
  std::vector<TransferRecord> transfers;  // grouped per parent, control first
};

// Baseline of every instance, then for each parent a transfer run fed by its
// descendants' baseline bests.
CampaignResult run_campaign(const std::vector<KnapsackInstance>& instances,
                            const CampaignConfig& config);

// Every forward run used the reverse schedule's duration.
bool fair_time(const CampaignResult& result, const AnnealSchedule& schedule);

}  // namespace ratlab
