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

#include "ratlab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "ratlab/error.hpp"
#include "ratlab/rng.hpp"

namespace ratlab {

std::string to_string(BackendKind kind) {
  return kind == BackendKind::statevector ? "statevector" : "sa";
}

BackendKind parse_backend(const std::string& text) {
  if (text == "statevector") return BackendKind::statevector;
  if (text == "sa") return BackendKind::sa;
  fail(ErrorKind::invalid_argument, "unknown backend '" + text + "'");
}

RunStats run_stats(std::span<const double> run_bests) {
  require(!run_bests.empty(), ErrorKind::invalid_argument, "no runs to summarize");
  RunStats out;
  out.best = *std::min_element(run_bests.begin(), run_bests.end());
  double sum = 0.0;
  for (double v : run_bests) sum += v;
  const double n = static_cast<double>(run_bests.size());
  out.avg = sum / n;
  double sq = 0.0;
  for (double v : run_bests) sq += (v - out.avg) * (v - out.avg);
  out.std = std::sqrt(sq / n);
  return out;
}

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& task) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

struct RunOutcome {
  std::vector<double> bests;
  std::vector<Bitstring> states;
  double norm_drift = 0.0;
};

using SeedFn = std::function<std::uint64_t(int)>;

void collect(RunOutcome& out, const SampleSet& set) {
  out.bests.push_back(set.lowest().energy);
  out.states.push_back(set.lowest().bits);
}

RunOutcome forward_runs(const QuboModel& model, const BackendConfig& backend,
                        double total_time, int runs, int reads, const SeedFn& seed) {
  RunOutcome out;
  if (backend.kind == BackendKind::statevector) {
    const auto dist = forward_distribution(model, total_time, backend.driver, backend.step);
    out.norm_drift = dist.norm_drift;
    for (int r = 0; r < runs; ++r) {
      collect(out, sample_distribution(model, dist.probabilities, reads, seed(r)));
    }
    return out;
  }
  for (int r = 0; r < runs; ++r) {
    SaParams p{backend.sa_sweeps, backend.beta_hot, backend.beta_cold, reads, seed(r)};
    collect(out, sa_forward(model, p));
  }
  return out;
}

RunOutcome reverse_runs(const QuboModel& model, const Bitstring& initial,
                        const AnnealSchedule& schedule, const BackendConfig& backend,
                        int runs, int reads, const SeedFn& seed) {
  RunOutcome out;
  if (backend.kind == BackendKind::statevector) {
    const auto dist =
        reverse_distribution(model, initial, schedule, backend.driver, backend.step);
    out.norm_drift = dist.norm_drift;
    for (int r = 0; r < runs; ++r) {
      collect(out, sample_distribution(model, dist.probabilities, reads, seed(r)));
    }
    return out;
  }
  for (int r = 0; r < runs; ++r) {
    SaParams p{backend.sa_sweeps, backend.beta_hot, backend.beta_cold, reads, seed(r)};
    collect(out, sa_reverse(model, initial, schedule, p));
  }
  return out;
}

std::string backend_tag(const BackendConfig& backend) { return to_string(backend.kind); }

void check_counts(int runs, int reads) {
  require(runs >= 1, ErrorKind::invalid_argument, "runs must be >= 1");
  require(reads >= 1, ErrorKind::invalid_argument, "reads must be >= 1");
}

}  // namespace

std::vector<BaselineRecord> run_baseline(const std::vector<KnapsackInstance>& instances,
                                         const BackendConfig& backend, int runs, int reads,
                                         double total_time, std::uint64_t master_seed,
                                         int jobs) {
  check_counts(runs, reads);
  require(total_time > 0.0, ErrorKind::invalid_argument, "total_time must be positive");
  std::vector<BaselineRecord> records(instances.size());

  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    const auto& inst = instances[i];
    BaselineRecord& rec = records[i];
    rec.instance = inst.name;
    rec.parent = inst.lineage.parent;
    rec.total_time = total_time;
    rec.backend = backend_tag(backend);
    rec.master_seed = master_seed;
    try {
      const QuboModel model = build_qubo(inst);
      rec.num_vars = static_cast<int>(model.num_vars());
      rec.item_count = model.item_count;
      if (inst.items.size() <= kMaxExactItems) rec.optimum_energy = solve_exact(inst).energy;
      const auto outcome =
          forward_runs(model, backend, total_time, runs, reads, [&](int r) {
            return derive_seed(master_seed, {inst.name, kControlSource},
                               static_cast<std::uint64_t>(r));
          });
      rec.run_bests = outcome.bests;
      rec.norm_drift = outcome.norm_drift;
      rec.best_energy = *std::min_element(outcome.bests.begin(), outcome.bests.end());
      bool have = false;
      for (std::size_t r = 0; r < outcome.bests.size(); ++r) {
        if (outcome.bests[r] != rec.best_energy) continue;
        if (!have || outcome.states[r] < rec.best) rec.best = outcome.states[r];
        have = true;
      }
    } catch (const Error& e) {
      rec.error = e.what();
    }
  });

  std::map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < records.size(); ++i) by_name[records[i].instance] = i;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& rec = records[i];
    if (!rec.parent || rec.error) continue;
    auto it = by_name.find(*rec.parent);
    if (it == by_name.end()) continue;
    const auto& parent_rec = records[it->second];
    if (parent_rec.error || parent_rec.num_vars != rec.num_vars) continue;
    const QuboModel parent_model = build_qubo(instances[it->second]);
    rec.closeness = closeness(parent_model, parent_rec.best, parent_rec.best_energy, rec.best);
  }
  return records;
}

std::vector<TransferRecord> run_transfer(const KnapsackInstance& target,
                                         const std::vector<TransferSource>& sources,
                                         const AnnealSchedule& schedule,
                                         const BackendConfig& backend, int runs, int reads,
                                         std::uint64_t master_seed, int jobs) {
  check_counts(runs, reads);
  require(schedule.kind == ScheduleKind::reverse && validate(schedule).empty(),
          ErrorKind::invalid_argument, "transfer needs a valid reverse schedule");
  const QuboModel model = build_qubo(target);
  const std::string schedule_text = format_schedule(schedule);

  std::vector<TransferRecord> records(sources.size() + 1);
  parallel_for(records.size(), jobs, [&](std::size_t i) {
    TransferRecord& rec = records[i];
    rec.source = i == 0 ? std::string(kControlSource) : sources[i - 1].name;
    rec.target = target.name;
    rec.schedule = schedule_text;
    rec.backend = backend_tag(backend);
    rec.master_seed = master_seed;
    rec.total_time = schedule.duration();
    auto seed = [&](int r) {
      return derive_seed(master_seed, {target.name, rec.source},
                         static_cast<std::uint64_t>(r));
    };
    try {
      RunOutcome outcome;
      if (i == 0) {
        outcome = forward_runs(model, backend, schedule.duration(), runs, reads, seed);
      } else {
        const auto& src = sources[i - 1];
        if (static_cast<Eigen::Index>(src.best.size()) != model.num_vars()) {
          rec.skipped = "incompatible source: " + std::to_string(src.best.size()) +
                        " variables vs " + std::to_string(model.num_vars());
          return;
        }
        outcome = reverse_runs(model, src.best, schedule, backend, runs, reads, seed);
      }
      rec.run_bests = outcome.bests;
      rec.norm_drift = outcome.norm_drift;
      rec.stats = run_stats(rec.run_bests);
    } catch (const Error& e) {
      rec.skipped = e.what();
    }
  });
  return records;
}

std::vector<SweepEntry> schedule_sweep(const KnapsackInstance& target,
                                       const std::vector<AnnealSchedule>& candidates,
                                       int runs, int reads, const BackendConfig& backend,
                                       std::uint64_t master_seed, int jobs) {
  check_counts(runs, reads);
  const QuboModel model = build_qubo(target);
  const auto n = static_cast<std::size_t>(model.num_vars());

  std::vector<Bitstring> starts;
  for (int r = 0; r < runs; ++r) {
    Rng rng(derive_seed(master_seed, {target.name, "sweep-initial"},
                        static_cast<std::uint64_t>(r)));
    Bitstring b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, rng.uniform() < 0.5);
    starts.push_back(b);
  }

  std::vector<SweepEntry> entries(candidates.size());
  parallel_for(candidates.size(), jobs, [&](std::size_t c) {
    SweepEntry& entry = entries[c];
    entry.schedule = candidates[c];
    const auto violations = validate(candidates[c]);
    if (!violations.empty() || candidates[c].kind != ScheduleKind::reverse) {
      entry.excluded = violations.empty() ? "not a reverse schedule" : violations.front();
      return;
    }
    const std::string text = format_schedule(candidates[c]);
    try {
      for (int r = 0; r < runs; ++r) {
        const auto outcome = reverse_runs(model, starts[static_cast<std::size_t>(r)],
                                          candidates[c], backend, 1, reads, [&](int) {
                                            return derive_seed(master_seed,
                                                               {target.name, text},
                                                               static_cast<std::uint64_t>(r));
                                          });
        entry.run_bests.push_back(outcome.bests.front());
      }
      entry.stats = run_stats(entry.run_bests);
    } catch (const Error& e) {
      entry.excluded = e.what();
      entry.run_bests.clear();
    }
  });

  std::stable_sort(entries.begin(), entries.end(), [](const SweepEntry& a, const SweepEntry& b) {
    if (a.excluded.has_value() != b.excluded.has_value()) return !a.excluded.has_value();
    if (a.excluded) return false;
    if (a.stats.avg != b.stats.avg) return a.stats.avg < b.stats.avg;
    return a.stats.std < b.stats.std;
  });
  return entries;
}

std::vector<AnnealSchedule> default_sweep_grid() {
  std::vector<AnnealSchedule> grid;
  for (double s_p : {0.3, 0.4, 0.5, 0.6, 0.7}) {
    for (double pause : {0.0, 25.0, 50.0, 75.0, 100.0}) {
      grid.push_back(make_reverse(s_p, 2.5, pause, 0.25));
    }
  }
  return grid;
}

CampaignResult run_campaign(const std::vector<KnapsackInstance>& instances,
                            const CampaignConfig& config) {
  require(config.schedule.kind == ScheduleKind::reverse, ErrorKind::invalid_argument,
          "campaign schedule must be a reverse schedule");
  CampaignResult result;
  result.baseline = run_baseline(instances, config.backend, config.runs, config.reads,
                                 config.schedule.duration(), config.master_seed, config.jobs);

  for (std::size_t p = 0; p < instances.size(); ++p) {
    const auto& parent = instances[p];
    if (parent.lineage.parent) continue;
    std::vector<TransferSource> sources;
    for (std::size_t d = 0; d < instances.size(); ++d) {
      const auto& rec = result.baseline[d];
      if (!instances[d].lineage.parent || *instances[d].lineage.parent != parent.name) continue;
      if (rec.error) continue;
      sources.push_back({rec.instance, rec.best});
    }
    auto records = run_transfer(parent, sources, config.schedule, config.backend, config.runs,
                                config.reads, config.master_seed, config.jobs);
    result.transfers.insert(result.transfers.end(), records.begin(), records.end());
  }
  return result;
}

bool fair_time(const CampaignResult& result, const AnnealSchedule& schedule) {
  const double t = schedule.duration();
  for (const auto& r : result.baseline) {
    if (r.total_time != t) return false;
  }
  for (const auto& r : result.transfers) {
    if (r.total_time != t) return false;
  }
  return true;
}

}  // namespace ratlab
