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

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "ratlab/experiment.hpp"
#include "ratlab/knapsack.hpp"
#include "ratlab/oracle.hpp"
#include "ratlab/report.hpp"
#include "ratlab/sample_set.hpp"

namespace ratlab {

using Json = nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// {"name", "items": [{"v", "w"}], "capacity", "lineage": {"parent", "category",
// "fraction"}}; absent lineage fields are null.
Json to_json(const KnapsackInstance& instance);
KnapsackInstance instance_from_json(const Json& j);
KnapsackInstance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const KnapsackInstance& instance);

// Instances in a directory (*.json holding a "capacity" key), name order.
std::vector<KnapsackInstance> read_instance_dir(const std::filesystem::path& dir);

Json to_json(const SampleSet& set);
SampleSet sample_set_from_json(const Json& j);
Json to_json(const OptimalSolution& solution);

Json to_json(const ClosenessReport& closeness);
ClosenessReport closeness_from_json(const Json& j);

Json to_json(const BaselineRecord& record);
BaselineRecord baseline_from_json(const Json& j);

Json to_json(const TransferRecord& record);
TransferRecord transfer_from_json(const Json& j);

Json to_json(const SweepEntry& entry);
Json to_json(const CorrelationReport& report);

Json to_json(const BackendConfig& backend);
BackendConfig backend_from_json(const Json& j);

// Campaign file: backend, runs, reads, schedule, master_seed, instance_dir and
// optional driver / integrator / sa / jobs sections. Relative instance_dir is
// resolved against `base_dir`.
CampaignConfig campaign_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json to_json(const CampaignConfig& config);

// Writes `j` with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);
Json read_json(const std::filesystem::path& path);

}  // namespace ratlab
