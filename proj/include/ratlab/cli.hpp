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
#include <ostream>
#include <string>
#include <vector>

#include "ratlab/experiment.hpp"

namespace ratlab {

// Entry point of the `ratlab` tool. `args` excludes the program name.
// Returns the process exit code: 0 success, 1 usage, 2 data, 3 accuracy.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Tables, box-plot CSVs and correlation report for a finished campaign.
// Returns the written files.
std::vector<std::filesystem::path> write_reports(const std::filesystem::path& dir,
                                                 const std::vector<BaselineRecord>& baseline,
                                                 const std::vector<TransferRecord>& transfers,
                                                 std::vector<std::string>* warnings = nullptr);

}  // namespace ratlab
