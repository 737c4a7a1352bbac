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

#include "ratlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ratlab/error.hpp"

namespace ratlab {

namespace fs = std::filesystem;

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::io, "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), ErrorKind::io, "cannot write '" + path.string() + "'");
  out << text;
  require(out.good(), ErrorKind::io, "write failed for '" + path.string() + "'");
}

void write_json(const fs::path& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

Json read_json(const fs::path& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::exception& e) {
    fail(ErrorKind::data, "invalid JSON in '" + path.string() + "': " + e.what());
  }
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

double real_or_nan(const Json& j) {
  return j.is_null() ? std::nan("") : j.get<double>();
}

Json real_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorKind::data, std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const KnapsackInstance& instance) {
  Json items = Json::array();
  for (const auto& it : instance.items) items.push_back({{"v", it.value}, {"w", it.weight}});
  return {{"name", instance.name},
          {"items", items},
          {"capacity", instance.capacity},
          {"lineage",
           {{"parent", optional_json(instance.lineage.parent)},
            {"category", optional_json(instance.lineage.category)},
            {"fraction", optional_json(instance.lineage.fraction)}}}};
}

KnapsackInstance instance_from_json(const Json& j) {
  return guarded("instance", [&] {
    KnapsackInstance inst;
    inst.name = j.at("name").get<std::string>();
    for (const auto& it : j.at("items")) {
      inst.items.push_back({it.at("v").get<int>(), it.at("w").get<int>()});
    }
    inst.capacity = j.at("capacity").get<int>();
    if (j.contains("lineage") && !j.at("lineage").is_null()) {
      const auto& l = j.at("lineage");
      if (l.contains("parent") && !l["parent"].is_null())
        inst.lineage.parent = l["parent"].get<std::string>();
      if (l.contains("category") && !l["category"].is_null())
        inst.lineage.category = l["category"].get<std::string>();
      if (l.contains("fraction") && !l["fraction"].is_null())
        inst.lineage.fraction = l["fraction"].get<double>();
    }
    validate(inst);
    return inst;
  });
}

KnapsackInstance read_instance(const fs::path& path) {
  return instance_from_json(read_json(path));
}

void write_instance(const fs::path& path, const KnapsackInstance& instance) {
  write_json(path, to_json(instance));
}

std::vector<KnapsackInstance> read_instance_dir(const fs::path& dir) {
  require(fs::is_directory(dir), ErrorKind::io,
          "instance directory '" + dir.string() + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<KnapsackInstance> out;
  for (const auto& f : files) {
    const Json j = read_json(f);
    if (!j.is_object() || !j.contains("capacity")) continue;
    out.push_back(instance_from_json(j));
  }
  std::sort(out.begin(), out.end(),
            [](const KnapsackInstance& a, const KnapsackInstance& b) { return a.name < b.name; });
  return out;
}

Json to_json(const SampleSet& set) {
  Json records = Json::array();
  for (const auto& r : set.records) {
    records.push_back({{"bits", r.bits.to_string()}, {"energy", r.energy}, {"count", r.count}});
  }
  return {{"backend", set.backend},
          {"seed", set.seed},
          {"total_reads", set.total_reads},
          {"records", records}};
}

SampleSet sample_set_from_json(const Json& j) {
  return guarded("sample set", [&] {
    SampleSet set;
    set.backend = j.at("backend").get<std::string>();
    set.seed = j.at("seed").get<std::uint64_t>();
    set.total_reads = j.at("total_reads").get<int>();
    for (const auto& r : j.at("records")) {
      set.records.push_back({Bitstring::parse(r.at("bits").get<std::string>()),
                             r.at("energy").get<double>(), r.at("count").get<int>()});
    }
    return set;
  });
}

Json to_json(const OptimalSolution& s) {
  return {{"items", s.items.to_string()},
          {"bitstring", s.bitstring.to_string()},
          {"profit", s.profit},
          {"weight", s.weight},
          {"energy", s.energy}};
}

Json to_json(const ClosenessReport& c) {
  return {{"h", c.hamming.total},
          {"n_h", c.hamming.items},
          {"s_h", c.hamming.slack},
          {"energy_cross", c.energy_cross},
          {"energy_gap", c.energy_gap}};
}

ClosenessReport closeness_from_json(const Json& j) {
  return guarded("closeness", [&] {
    ClosenessReport c;
    c.hamming = {j.at("h").get<int>(), j.at("n_h").get<int>(), j.at("s_h").get<int>()};
    c.energy_cross = j.at("energy_cross").get<double>();
    c.energy_gap = j.at("energy_gap").get<double>();
    return c;
  });
}

Json to_json(const BaselineRecord& r) {
  Json j = {{"instance", r.instance},
            {"parent", optional_json(r.parent)},
            {"num_vars", r.num_vars},
            {"item_count", r.item_count},
            {"best_energy", r.best_energy},
            {"best", r.best.to_string()},
            {"run_bests", r.run_bests},
            {"closeness", r.closeness ? to_json(*r.closeness) : Json(nullptr)},
            {"optimum_energy", optional_json(r.optimum_energy)},
            {"total_time", r.total_time},
            {"backend", r.backend},
            {"master_seed", r.master_seed},
            {"norm_drift", r.norm_drift},
            {"error", optional_json(r.error)}};
  return j;
}

BaselineRecord baseline_from_json(const Json& j) {
  return guarded("baseline record", [&] {
    BaselineRecord r;
    r.instance = j.at("instance").get<std::string>();
    if (!j.at("parent").is_null()) r.parent = j.at("parent").get<std::string>();
    r.num_vars = j.at("num_vars").get<int>();
    r.item_count = j.at("item_count").get<int>();
    r.best_energy = j.at("best_energy").get<double>();
    r.best = Bitstring::parse(j.at("best").get<std::string>());
    r.run_bests = j.at("run_bests").get<std::vector<double>>();
    if (!j.at("closeness").is_null()) r.closeness = closeness_from_json(j.at("closeness"));
    if (!j.at("optimum_energy").is_null()) r.optimum_energy = j.at("optimum_energy").get<double>();
    r.total_time = j.at("total_time").get<double>();
    r.backend = j.at("backend").get<std::string>();
    r.master_seed = j.at("master_seed").get<std::uint64_t>();
    r.norm_drift = j.at("norm_drift").get<double>();
    if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
    return r;
  });
}

Json to_json(const TransferRecord& r) {
  return {{"source", r.source},
          {"target", r.target},
          {"run_bests", r.run_bests},
          {"best", real_json(r.stats.best)},
          {"avg", real_json(r.stats.avg)},
          {"std", real_json(r.stats.std)},
          {"std_convention", "population"},
          {"statistic", "per-run minimum energy"},
          {"schedule", r.schedule},
          {"backend", r.backend},
          {"master_seed", r.master_seed},
          {"total_time", r.total_time},
          {"norm_drift", r.norm_drift},
          {"skipped", optional_json(r.skipped)}};
}

TransferRecord transfer_from_json(const Json& j) {
  return guarded("transfer record", [&] {
    TransferRecord r;
    r.source = j.at("source").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.run_bests = j.at("run_bests").get<std::vector<double>>();
    r.stats = {real_or_nan(j.at("best")), real_or_nan(j.at("avg")), real_or_nan(j.at("std"))};
    r.schedule = j.at("schedule").get<std::string>();
    r.backend = j.at("backend").get<std::string>();
    r.master_seed = j.at("master_seed").get<std::uint64_t>();
    r.total_time = j.at("total_time").get<double>();
    r.norm_drift = j.at("norm_drift").get<double>();
    if (!j.at("skipped").is_null()) r.skipped = j.at("skipped").get<std::string>();
    return r;
  });
}

Json to_json(const SweepEntry& e) {
  return {{"schedule", format_schedule(e.schedule)},
          {"run_bests", e.run_bests},
          {"mean_best", e.excluded ? Json(nullptr) : Json(e.stats.avg)},
          {"std", e.excluded ? Json(nullptr) : Json(e.stats.std)},
          {"excluded", optional_json(e.excluded)}};
}

Json to_json(const CorrelationReport& c) {
  return {{"metric", to_string(c.metric)},
          {"spearman_rho", real_json(c.spearman_rho)},
          {"sample_count", c.sample_count}};
}

Json to_json(const BackendConfig& b) {
  Json driver = {{"energy_scale", b.driver.energy_scale},
                 {"time_scale", b.driver.time_scale},
                 {"autoscale", b.driver.autoscale},
                 {"amplitude_table", b.driver.table.has_value()}};
  return {{"backend", to_string(b.kind)},
          {"driver", driver},
          {"integrator",
           {{"order", b.step.order},
            {"max_phase", b.step.max_phase},
            {"norm_tolerance", b.step.norm_tolerance},
            {"qubit_cap", b.step.qubit_cap}}},
          {"sa",
           {{"sweeps", b.sa_sweeps},
            {"beta_hot", b.beta_hot},
            {"beta_cold", b.beta_cold}}}};
}

BackendConfig backend_from_json(const Json& j) {
  return guarded("backend config", [&] {
    BackendConfig b;
    if (j.contains("backend")) b.kind = parse_backend(j.at("backend").get<std::string>());
    if (j.contains("driver")) {
      const auto& d = j.at("driver");
      b.driver.energy_scale = d.value("energy_scale", b.driver.energy_scale);
      b.driver.time_scale = d.value("time_scale", b.driver.time_scale);
      b.driver.autoscale = d.value("autoscale", b.driver.autoscale);
      if (d.contains("amplitude_csv") && d.at("amplitude_csv").is_string()) {
        b.driver.table = load_amplitude_csv(d.at("amplitude_csv").get<std::string>());
      }
    }
    if (j.contains("integrator")) {
      const auto& s = j.at("integrator");
      b.step.order = s.value("order", b.step.order);
      b.step.max_phase = s.value("max_phase", b.step.max_phase);
      b.step.norm_tolerance = s.value("norm_tolerance", b.step.norm_tolerance);
      b.step.qubit_cap = s.value("qubit_cap", b.step.qubit_cap);
    }
    if (j.contains("sa")) {
      const auto& s = j.at("sa");
      b.sa_sweeps = s.value("sweeps", b.sa_sweeps);
      b.beta_hot = s.value("beta_hot", b.beta_hot);
      b.beta_cold = s.value("beta_cold", b.beta_cold);
    }
    return b;
  });
}

CampaignConfig campaign_from_json(const Json& j, const fs::path& base_dir) {
  return guarded("campaign config", [&] {
    CampaignConfig c;
    c.backend = backend_from_json(j);
    c.runs = j.value("runs", c.runs);
    c.reads = j.value("reads", c.reads);
    if (j.contains("schedule")) c.schedule = parse_schedule(j.at("schedule").get<std::string>());
    c.master_seed = j.value("master_seed", c.master_seed);
    c.jobs = j.value("jobs", c.jobs);
    fs::path dir = j.at("instance_dir").get<std::string>();
    if (dir.is_relative() && !base_dir.empty()) dir = base_dir / dir;
    c.instance_dir = dir.string();
    require(c.runs >= 1 && c.reads >= 1, ErrorKind::data, "runs and reads must be >= 1");
    require(c.schedule.kind == ScheduleKind::reverse, ErrorKind::data,
            "campaign schedule must be a reverse schedule");
    return c;
  });
}

Json to_json(const CampaignConfig& c) {
  Json j = to_json(c.backend);
  j["runs"] = c.runs;
  j["reads"] = c.reads;
  j["schedule"] = format_schedule(c.schedule);
  j["master_seed"] = c.master_seed;
  j["instance_dir"] = c.instance_dir;
  return j;
}

}  // namespace ratlab
