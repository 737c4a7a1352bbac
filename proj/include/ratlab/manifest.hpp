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
#include <filesystem>
#include <string>
#include <vector>

#include "ratlab/io.hpp"

namespace ratlab {

inline constexpr const char* kToolVersion = "0.1.0";

std::string sha256_hex(const std::string& bytes);
std::string file_digest(const std::filesystem::path& path);

struct ManifestEntry {
  std::string path;    // relative to the manifest directory
  std::string sha256;
};

struct CampaignManifest {
  Json config;
  std::vector<ManifestEntry> instances;
  std::vector<ManifestEntry> results;
  std::string tool_version = kToolVersion;
  std::uint64_t master_seed = 0;
  std::string started_at;
  std::string finished_at;
};

// UTC "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

// Digest entry for `file`, stored relative to `root` when it lies inside it.
ManifestEntry make_entry(const std::filesystem::path& root, const std::filesystem::path& file);

Json to_json(const CampaignManifest& manifest);
CampaignManifest manifest_from_json(const Json& j);

// Problems found: missing files or digest mismatches. Empty when verified.
std::vector<std::string> verify_manifest(const std::filesystem::path& manifest_path);

}  // namespace ratlab
