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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ratlab/cli.hpp"
#include "ratlab/family.hpp"
#include "ratlab/oracle.hpp"
#include "ratlab/io.hpp"
#include "ratlab/manifest.hpp"
#include "support/helpers.hpp"

using namespace ratlab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ratlab_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) { return read_text_file(p); }

}  // namespace

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("instance json round trip") {
  const auto parent = gen_parent(7, 2);
  CHECK(instance_from_json(to_json(parent)) == parent);
  const auto child = derive_descendant(parent, Category(Direction::H2H, 6)).instance;
  const auto back = instance_from_json(to_json(child));
  CHECK(back == child);
  CHECK(to_json(child)["lineage"]["fraction"] == 0.6);
  CHECK(to_json(parent)["lineage"]["parent"].is_null());
  CHECK(to_json(parent)["items"][0].contains("v"));
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"name":"x","items":[],"capacity":1})")), Error);
  CHECK_THROWS_AS(instance_from_json(Json::parse(R"({"name":"x"})")), Error);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  const Run r = cli({"gen", "--n", "1", "--out", scratch("usage").string()});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("gen") {
  const fs::path dir = scratch("gen");
  REQUIRE(cli({"gen", "--n", "14", "--seed", "3", "--out", dir.string()}).code == 0);
  int instances = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().filename() != "family.json") ++instances;
  }
  CHECK(instances == 17);
  const Json family = read_json(dir / "family.json");
  CHECK(family["instances"].size() == 17);
  CHECK(fs::exists(dir / "s14_0.2_L2L.json"));
  const std::string first = slurp(dir / "s14_0.4_H2L.json");
  const fs::path again = scratch("gen2");
  REQUIRE(cli({"gen", "--n", "14", "--seed", "3", "--out", again.string()}).code == 0);
  CHECK(slurp(again / "s14_0.4_H2L.json") == first);
  CHECK(slurp(again / "family.json") == slurp(dir / "family.json"));
  CHECK(read_instance(dir / "s14.json") == gen_parent(14, 3));
}

TEST_CASE("solve") {
  const fs::path dir = scratch("solve");
  REQUIRE(cli({"gen", "--n", "6", "--seed", "1", "--out", dir.string()}).code == 0);
  const std::string inst = (dir / "s6_0.4_L2H.json").string();

  REQUIRE(cli({"solve", "--instance", inst, "--backend", "exact", "--out", (dir / "exact.json").string()}).code == 0);
  const Json exact = read_json(dir / "exact.json");
  const auto descendant = read_instance(inst);
  CHECK(exact["result"]["optimal"]["profit"] ==
        oracle::dp_knapsack(testing::items_of(descendant), descendant.capacity));
  CHECK(exact["config"]["backend"] == "exact");

  const auto opt = solve_exact(descendant);
  const std::string pause_schedule = "[(0.0, 1.0), (2.5, 0.5), (102.5, 0.5), (102.75, 1.0)]";
  for (const std::string backend : {"statevector", "sa"}) {
    const fs::path out = dir / (backend + ".json");
    const Run r = cli({"solve", "--instance", inst, "--backend", backend, "--runs", "2", "--reads", "50",
                       "--schedule", pause_schedule, "--initial", opt.bitstring.to_string(), "--seed", "4",
                       "--max-phase", "0.5", "--order", "2", "--out", out.string()});
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const Json j = read_json(out);
    CHECK(j["config"]["schedule"] == pause_schedule);
    CHECK(j["config"]["reinitialize_state"] == true);
    CHECK(j["result"]["runs"].size() == 2);
    CHECK(j["result"]["run_bests"].size() == 2);
    CHECK(sample_set_from_json(j["result"]["runs"][0]).total_reads == 50);
  }
  // slow anneal on the literal Hamiltonian of a 3-item parent
  REQUIRE(cli({"gen", "--n", "3", "--seed", "1", "--out", (dir / "small").string()}).code == 0);
  const fs::path small = dir / "small" / "s3.json";
  const Run raw = cli({"solve", "--instance", small.string(), "--backend", "statevector", "--time", "100",
                       "--energy-scale", "2", "--raw-hamiltonian", "--reads", "20", "--out",
                       (dir / "raw.json").string()});
  REQUIRE_MESSAGE(raw.code == 0, raw.err);
  const Json rj = read_json(dir / "raw.json");
  CHECK(rj["config"]["driver"]["autoscale"] == false);
  const auto s3 = read_instance(small.string());
  CHECK(rj["result"]["best"].get<double>() == solve_exact(s3).energy);

  const Run missing_initial = cli({"solve", "--instance", inst, "--backend", "sa", "--schedule", pause_schedule});
  CHECK(missing_initial.code == 1);

  const Run missing = cli({"solve", "--instance", (dir / "nope.json").string()});
  CHECK(missing.code != 0);
  CHECK_FALSE(missing.err.empty());

  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(cli({"solve", "--instance", (dir / "broken.json").string()}).code == 2);
  CHECK(cli({"solve", "--instance", inst, "--backend", "sa", "--schedule", "[(0.0, 1.0), (oops"}).code == 2);
}

TEST_CASE("transfer, report and manifest") {
  const fs::path inst_dir = scratch("campaign_inst");
  REQUIRE(cli({"gen", "--n", "5", "--seed", "2", "--out", inst_dir.string()}).code == 0);
  REQUIRE(cli({"gen", "--n", "6", "--seed", "2", "--out", inst_dir.string()}).code == 0);
  const fs::path cfg = inst_dir.parent_path() / "ratlab_cli_campaign.json";
  write_json(cfg, Json{{"backend", "statevector"},
                       {"runs", 3},
                       {"reads", 100},
                       {"schedule", "[(0.0, 1.0), (2.5, 0.5), (102.5, 0.5), (102.75, 1.0)]"},
                       {"master_seed", 11},
                       {"instance_dir", inst_dir.string()},
                       {"integrator", {{"order", 2}, {"max_phase", 0.5}}}});
  const fs::path a = scratch("campaign_a");
  const fs::path b = scratch("campaign_b");
  const Run ra = cli({"transfer", "--config", cfg.string(), "--out", a.string(), "--jobs", "2"});
  REQUIRE_MESSAGE(ra.code == 0, ra.err);
  REQUIRE(cli({"transfer", "--config", cfg.string(), "--out", b.string()}).code == 0);

  for (const char* f : {"baseline.json", "transfer.json", "table1.md", "table1.csv", "table2.md", "table2.csv",
                        "correlation.json", "boxplot_s5_hamming.csv", "boxplot_s6_energy_gap.csv"}) {
    REQUIRE_MESSAGE(fs::exists(a / f), f);
    CHECK_MESSAGE(slurp(a / f) == slurp(b / f), f);
  }
  const Json baseline = read_json(a / "baseline.json");
  CHECK(baseline["records"].size() == 34);
  CHECK(read_json(a / "transfer.json")["records"].size() == 34u);
  CHECK(verify_manifest(a / "manifest.json").empty());

  // every record round-trips
  for (const auto& j : baseline["records"]) CHECK(to_json(baseline_from_json(j)) == j);
  const Json transfers = read_json(a / "transfer.json");
  for (const auto& j : transfers["records"]) CHECK(to_json(transfer_from_json(j)) == j);

  const std::string table2 = slurp(a / "table2.md");
  REQUIRE(cli({"report", "--dir", a.string()}).code == 0);
  CHECK(slurp(a / "table2.md") == table2);

  std::ofstream(a / "table1.md", std::ios::app) << "tampered\n";
  CHECK_FALSE(verify_manifest(a / "manifest.json").empty());
  const Run tampered = cli({"report", "--dir", a.string()});
  CHECK(tampered.code == 2);
  CHECK(tampered.err.find("manifest") != std::string::npos);
}

TEST_CASE("sweep") {
  const fs::path dir = scratch("sweep");
  REQUIRE(cli({"gen", "--n", "5", "--seed", "1", "--out", dir.string()}).code == 0);
  const fs::path out = dir / "sweep_out.json";
  const Run r = cli({"sweep", "--instance", (dir / "s5.json").string(), "--backend", "sa", "--runs", "2",
                     "--reads", "10", "--sweeps", "20", "--schedule", "[(0.0, 1.0), (2.5, 0.5), (102.5, 0.5), (102.75, 1.0)]",
                     "--schedule", "[(0.0, 1.0), (1.0, 0.3), (2.0, 1.0)]", "--schedule", "[(bad", "--out",
                     out.string()});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const Json j = read_json(out);
  CHECK(j["ranking"].size() == 2);
  CHECK(j["unparsed"].size() == 1);
}
