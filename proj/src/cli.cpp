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

#include "ratlab/cli.hpp"

#include <cstdlib>
#include <map>

#include "CLI11.hpp"
#include "ratlab/error.hpp"
#include "ratlab/family.hpp"
#include "ratlab/io.hpp"
#include "ratlab/manifest.hpp"
#include "ratlab/report.hpp"

namespace ratlab {

namespace fs = std::filesystem;

namespace {

fs::path default_out_dir() {
  const char* env = std::getenv("RATLAB_OUT_DIR");
  return env && *env ? fs::path(env) : fs::path(".");
}

// Flags shared by every sampling command.
struct BackendFlags {
  double energy_scale = 1.0;
  double time_scale = 1.0;
  double max_phase = StepControl{}.max_phase;
  int order = StepControl{}.order;
  std::string amplitude_csv;
  bool raw = false;
  int sweeps = 1000;
  double beta_hot = 0.001;
  double beta_cold = 10.0;

  void attach(CLI::App* app) {
    app->add_option("--energy-scale", energy_scale, "Amplitude energy scale");
    app->add_option("--time-scale", time_scale, "Physical time per schedule unit");
    app->add_option("--max-phase", max_phase, "Integrator phase bound per step");
    app->add_option("--order", order, "Integrator order (2 or 4)");
    app->add_option("--amplitude-csv", amplitude_csv, "Tabulated A(s), B(s) (header s,A,B)");
    app->add_flag("--raw-hamiltonian", raw, "Skip peak normalisation of the problem Hamiltonian");
    app->add_option("--sweeps", sweeps, "SA sweeps per read");
    app->add_option("--beta-hot", beta_hot, "SA hot inverse temperature");
    app->add_option("--beta-cold", beta_cold, "SA cold inverse temperature");
  }

  BackendConfig make(BackendKind kind) const {
    BackendConfig b;
    b.kind = kind;
    b.driver.energy_scale = energy_scale;
    b.driver.time_scale = time_scale;
    b.driver.autoscale = !raw;
    if (!amplitude_csv.empty()) b.driver.table = load_amplitude_csv(amplitude_csv);
    b.step.max_phase = max_phase;
    b.step.order = order;
    b.sa_sweeps = sweeps;
    b.beta_hot = beta_hot;
    b.beta_cold = beta_cold;
    return b;
  }
};

struct GenArgs {
  int n = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  require(a.n >= 2, ErrorKind::invalid_argument, "gen: --n must be >= 2");
  const fs::path dir = a.out.empty() ? default_out_dir() : fs::path(a.out);
  const KnapsackInstance parent = gen_parent(static_cast<std::size_t>(a.n), a.seed);

  Json names = Json::array();
  Json files = Json::array();
  Json truncated = Json::array();
  auto write = [&](const KnapsackInstance& inst) {
    const fs::path file = dir / (inst.name + ".json");
    write_instance(file, inst);
    names.push_back(inst.name);
    files.push_back({{"path", file.filename().string()}, {"sha256", file_digest(file)}});
  };
  write(parent);
  for (const auto& category : all_categories()) {
    const Derivation d = derive_descendant(parent, category);
    if (d.truncated) truncated.push_back(d.instance.name);
    write(d.instance);
  }
  Json manifest = {{"parent", parent.name},
                   {"n", a.n},
                   {"seed", a.seed},
                   {"tool_version", kToolVersion},
                   {"instances", names},
                   {"files", files},
                   {"truncated_derivations", truncated}};
  write_json(dir / "family.json", manifest);
  out << "wrote " << names.size() << " instances to " << dir.string() << "\n";
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string backend = "exact";
  int runs = 1;
  int reads = 1000;
  std::string schedule;
  double time = 102.75;
  std::string initial;
  std::uint64_t seed = 0;
  std::string out;
  BackendFlags flags;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const KnapsackInstance inst = read_instance(a.instance);
  const QuboModel model = build_qubo(inst);
  Json config = {{"command", "solve"},
                 {"instance", inst.name},
                 {"backend", a.backend},
                 {"seed", a.seed}};
  Json result;

  if (a.backend == "exact") {
    result["optimal"] = to_json(solve_exact(inst));
    if (model.num_vars() <= kMaxEnumeratedVars) {
      const GroundStates gs = qubo_ground_states(model);
      result["qubo_minimum"] = gs.energy;
      result["qubo_minimizers"] = gs.count;
    }
  } else {
    const BackendConfig backend = a.flags.make(parse_backend(a.backend));
    require(a.runs >= 1 && a.reads >= 1, ErrorKind::invalid_argument,
            "solve: --runs and --reads must be >= 1");
    AnnealSchedule schedule =
        a.schedule.empty() ? make_forward(a.time) : parse_schedule(a.schedule);
    config.update(to_json(backend));
    config["runs"] = a.runs;
    config["reads"] = a.reads;
    config["schedule"] = format_schedule(schedule);
    config["reinitialize_state"] = true;

    std::optional<Bitstring> initial;
    if (schedule.kind == ScheduleKind::reverse) {
      require(!a.initial.empty(), ErrorKind::invalid_argument,
              "solve: a reverse schedule needs --initial <bitstring>");
      initial = Bitstring::parse(a.initial);
      require(static_cast<Eigen::Index>(initial->size()) == model.num_vars(),
              ErrorKind::dimension, "solve: --initial length does not match the model");
      config["initial"] = a.initial;
    }

    std::optional<Distribution> dist;
    if (backend.kind == BackendKind::statevector) {
      dist = initial ? reverse_distribution(model, *initial, schedule, backend.driver, backend.step)
                     : forward_distribution(model, schedule.duration(), backend.driver,
                                            backend.step);
      result["norm_drift"] = dist->norm_drift;
      result["integration_steps"] = dist->steps;
    }
    Json runs = Json::array();
    std::vector<double> bests;
    for (int r = 0; r < a.runs; ++r) {
      const std::uint64_t seed =
          derive_seed(a.seed, {inst.name, initial ? initial->to_string() : kControlSource},
                      static_cast<std::uint64_t>(r));
      SampleSet set;
      if (dist) {
        set = sample_distribution(model, dist->probabilities, a.reads, seed);
      } else {
        SaParams p{backend.sa_sweeps, backend.beta_hot, backend.beta_cold, a.reads, seed};
        set = initial ? sa_reverse(model, *initial, schedule, p) : sa_forward(model, p);
      }
      bests.push_back(set.lowest().energy);
      runs.push_back(to_json(set));
    }
    const RunStats stats = run_stats(bests);
    result["run_bests"] = bests;
    result["best"] = stats.best;
    result["avg"] = stats.avg;
    result["std"] = stats.std;
    result["runs"] = runs;
  }

  const fs::path file =
      a.out.empty() ? default_out_dir() / (inst.name + "_" + a.backend + ".json") : fs::path(a.out);
  write_json(file, Json{{"config", config}, {"result", result}});
  out << "wrote " << file.string() << "\n";
  return 0;
}

Json records_json(const Json& config, const std::vector<BaselineRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return {{"config", config}, {"records", arr}};
}

Json records_json(const Json& config, const std::vector<TransferRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return {{"config", config}, {"records", arr}};
}

struct TransferArgs {
  std::string config;
  std::string out;
  int jobs = 0;
};

int cmd_transfer(const TransferArgs& a, std::ostream& out, std::ostream& err) {
  const std::string started = utc_timestamp();
  const fs::path config_path = a.config;
  const Json raw = read_json(config_path);
  CampaignConfig config = campaign_from_json(raw, config_path.parent_path());
  if (a.jobs > 0) config.jobs = a.jobs;
  const fs::path dir = a.out.empty() ? default_out_dir() : fs::path(a.out);

  const auto instances = read_instance_dir(config.instance_dir);
  require(!instances.empty(), ErrorKind::data, "no instances in " + config.instance_dir);
  const CampaignResult result = run_campaign(instances, config);

  const Json echo = to_json(config);
  std::vector<fs::path> written;
  write_json(dir / "baseline.json", records_json(echo, result.baseline));
  written.push_back(dir / "baseline.json");
  write_json(dir / "transfer.json", records_json(echo, result.transfers));
  written.push_back(dir / "transfer.json");
  std::vector<std::string> warnings;
  for (const auto& f : write_reports(dir, result.baseline, result.transfers, &warnings)) {
    written.push_back(f);
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  for (const auto& r : result.baseline) {
    if (r.error) err << "warning: " << r.instance << ": " << *r.error << "\n";
  }

  CampaignManifest manifest;
  manifest.config = echo;
  manifest.master_seed = config.master_seed;
  manifest.started_at = started;
  manifest.finished_at = utc_timestamp();
  for (const auto& entry : fs::directory_iterator(config.instance_dir)) {
    if (entry.path().extension() == ".json") manifest.instances.push_back(make_entry(dir, entry.path()));
  }
  std::sort(manifest.instances.begin(), manifest.instances.end(),
            [](const ManifestEntry& x, const ManifestEntry& y) { return x.path < y.path; });
  for (const auto& f : written) manifest.results.push_back(make_entry(dir, f));
  write_json(dir / "manifest.json", to_json(manifest));
  out << "campaign finished: " << result.baseline.size() << " baseline records, "
      << result.transfers.size() << " transfer records in " << dir.string() << "\n";
  return 0;
}

struct SweepArgs {
  std::string instance;
  std::string backend = "statevector";
  int runs = 10;
  int reads = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> schedules;
  std::string out;
  int jobs = 1;
  BackendFlags flags;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const KnapsackInstance inst = read_instance(a.instance);
  const BackendConfig backend = a.flags.make(parse_backend(a.backend));
  std::vector<AnnealSchedule> candidates;
  Json excluded = Json::array();
  if (a.schedules.empty()) {
    candidates = default_sweep_grid();
  } else {
    for (const auto& text : a.schedules) {
      try {
        candidates.push_back(parse_schedule(text));
      } catch (const Error& e) {
        excluded.push_back({{"schedule", text}, {"reason", e.what()}});
      }
    }
  }
  const auto ranking = schedule_sweep(inst, candidates, a.runs, a.reads, backend, a.seed, a.jobs);
  Json config = to_json(backend);
  config["command"] = "sweep";
  config["instance"] = inst.name;
  config["runs"] = a.runs;
  config["reads"] = a.reads;
  config["master_seed"] = a.seed;
  Json rank = Json::array();
  for (const auto& e : ranking) rank.push_back(to_json(e));
  const fs::path file = a.out.empty() ? default_out_dir() / (inst.name + "_sweep.json") : fs::path(a.out);
  write_json(file, Json{{"config", config}, {"ranking", rank}, {"unparsed", excluded}});
  out << "wrote " << file.string() << "\n";
  return 0;
}

struct ReportArgs {
  std::string dir;
  bool plot = false;
  std::string plot_script;
};

int cmd_report(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  const fs::path dir = a.dir.empty() ? default_out_dir() : fs::path(a.dir);
  int code = 0;
  if (fs::exists(dir / "manifest.json")) {
    const auto problems = verify_manifest(dir / "manifest.json");
    for (const auto& p : problems) err << "manifest: " << p << "\n";
    if (!problems.empty()) code = exit_code(ErrorKind::data);
    else out << "manifest verified\n";
  }
  const Json baseline_doc = read_json(dir / "baseline.json");
  const Json transfer_doc = read_json(dir / "transfer.json");
  std::vector<BaselineRecord> baseline;
  std::vector<TransferRecord> transfers;
  try {
    for (const auto& j : baseline_doc.at("records")) baseline.push_back(baseline_from_json(j));
    for (const auto& j : transfer_doc.at("records")) transfers.push_back(transfer_from_json(j));
  } catch (const Json::exception& e) {
    fail(ErrorKind::data, std::string("malformed campaign records: ") + e.what());
  }
  std::vector<std::string> warnings;
  const auto files = write_reports(dir, baseline, transfers, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  out << "wrote " << files.size() << " report files to " << dir.string() << "\n";
  if (a.plot) {
    std::string script = a.plot_script;
    if (script.empty()) script = RATLAB_PLOT_SCRIPT;
    const std::string cmd = "python3 \"" + script + "\" \"" + dir.string() + "\"";
    if (std::system(cmd.c_str()) != 0) {
      err << "plotting failed: " << cmd << "\n";
      return exit_code(ErrorKind::io);
    }
  }
  return code;
}

}  // namespace

std::vector<fs::path> write_reports(const fs::path& dir,
                                    const std::vector<BaselineRecord>& baseline,
                                    const std::vector<TransferRecord>& transfers,
                                    std::vector<std::string>* warnings) {
  std::vector<fs::path> files;
  auto put = [&](const fs::path& p, const std::string& text) {
    write_text_file(p, text);
    files.push_back(p);
  };
  const TableArtifact t1 = emit_benchmark_table(baseline);
  put(dir / "table1.md", t1.markdown);
  put(dir / "table1.csv", t1.csv);
  const TableArtifact t2 = emit_transfer_table(transfers);
  put(dir / "table2.md", t2.markdown);
  put(dir / "table2.csv", t2.csv);

  std::vector<std::string> targets;
  for (const auto& r : transfers) {
    if (std::find(targets.begin(), targets.end(), r.target) == targets.end()) targets.push_back(r.target);
  }
  Json corr = Json::object();
  for (const auto& target : targets) {
    std::vector<TransferRecord> group;
    for (const auto& r : transfers) {
      if (r.target == target) group.push_back(r);
    }
    for (SortKey key : {SortKey::energy_gap, SortKey::hamming}) {
      const BoxplotData box = boxplot_data(group, baseline, key);
      put(dir / ("boxplot_" + target + "_" + to_string(key) + ".csv"), box.csv);
      if (warnings && key == SortKey::energy_gap) {
        warnings->insert(warnings->end(), box.warnings.begin(), box.warnings.end());
      }
    }
    try {
      Json arr = Json::array();
      for (const auto& c : correlation(group, baseline)) arr.push_back(to_json(c));
      corr[target] = arr;
    } catch (const Error& e) {
      corr[target] = {{"error", e.what()}};
    }
  }
  put(dir / "correlation.json", corr.dump(2) + "\n");
  return files;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ratlab: reverse-annealing transfer laboratory"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a parent instance and its 16 descendants");
  gen_cmd->add_option("--n", gen.n, "Number of items")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen.out, "Output directory");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON")->required();
  solve_cmd->add_option("--backend", solve.backend, "exact | statevector | sa")
      ->check(CLI::IsMember({"exact", "statevector", "sa"}));
  solve_cmd->add_option("--runs", solve.runs, "Independent runs");
  solve_cmd->add_option("--reads", solve.reads, "Reads per run");
  solve_cmd->add_option("--schedule", solve.schedule, "Schedule text, e.g. \"[(0.0, 1.0), ...]\"");
  solve_cmd->add_option("--time", solve.time, "Forward anneal time when no schedule is given");
  solve_cmd->add_option("--initial", solve.initial, "Initial bitstring for reverse annealing");
  solve_cmd->add_option("--seed", solve.seed, "Master seed");
  solve_cmd->add_option("--out", solve.out, "Result file");
  solve.flags.attach(solve_cmd);

  TransferArgs transfer;
  auto* transfer_cmd = app.add_subcommand("transfer", "Run a baseline + transfer campaign");
  transfer_cmd->add_option("--config", transfer.config, "Campaign config JSON")->required();
  transfer_cmd->add_option("--out", transfer.out, "Output directory");
  transfer_cmd->add_option("--jobs", transfer.jobs, "Worker threads");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Rank reverse schedules on one instance");
  sweep_cmd->add_option("--instance", sweep.instance, "Instance JSON")->required();
  sweep_cmd->add_option("--backend", sweep.backend, "statevector | sa")
      ->check(CLI::IsMember({"statevector", "sa"}));
  sweep_cmd->add_option("--runs", sweep.runs, "Runs per schedule");
  sweep_cmd->add_option("--reads", sweep.reads, "Reads per run");
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed");
  sweep_cmd->add_option("--schedule", sweep.schedules, "Candidate schedule (repeatable)")
      ->allow_extra_args(false);
  sweep_cmd->add_option("--out", sweep.out, "Result file");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads");
  sweep.flags.attach(sweep_cmd);

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Rebuild tables and plot data from stored records");
  report_cmd->add_option("--dir", report.dir, "Campaign output directory");
  report_cmd->add_flag("--plot", report.plot, "Render box plots with matplotlib");
  report_cmd->add_option("--plot-script", report.plot_script, "Plot script path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*transfer_cmd) return cmd_transfer(transfer, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*report_cmd) return cmd_report(report, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(ErrorKind::io);
  }
  return 1;
}

}  // namespace ratlab
