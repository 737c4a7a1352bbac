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

#include "ratlab/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <memory>

#include "ratlab/error.hpp"

namespace ratlab {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  require(ctx && EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) == 1 &&
              EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) == 1 &&
              EVP_DigestFinal_ex(ctx.get(), digest, &len) == 1,
          ErrorKind::io, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string file_digest(const fs::path& path) { return sha256_hex(read_text_file(path)); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ManifestEntry make_entry(const fs::path& root, const fs::path& file) {
  const fs::path rel = fs::relative(file, root);
  const bool inside = !rel.empty() && rel.native().rfind("..", 0) != 0;
  return {inside ? rel.generic_string() : fs::absolute(file).generic_string(),
          file_digest(file)};
}

namespace {

Json entries_json(const std::vector<ManifestEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back({{"path", e.path}, {"sha256", e.sha256}});
  return out;
}

std::vector<ManifestEntry> entries_from(const Json& j) {
  std::vector<ManifestEntry> out;
  for (const auto& e : j) out.push_back({e.at("path").get<std::string>(), e.at("sha256").get<std::string>()});
  return out;
}

}  // namespace

Json to_json(const CampaignManifest& m) {
  return {{"tool_version", m.tool_version},
          {"master_seed", m.master_seed},
          {"started_at", m.started_at},
          {"finished_at", m.finished_at},
          {"config", m.config},
          {"instances", entries_json(m.instances)},
          {"results", entries_json(m.results)}};
}

CampaignManifest manifest_from_json(const Json& j) {
  try {
    CampaignManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.started_at = j.at("started_at").get<std::string>();
    m.finished_at = j.at("finished_at").get<std::string>();
    m.config = j.at("config");
    m.instances = entries_from(j.at("instances"));
    m.results = entries_from(j.at("results"));
    return m;
  } catch (const Json::exception& e) {
    fail(ErrorKind::data, std::string("malformed manifest: ") + e.what());
  }
}

std::vector<std::string> verify_manifest(const fs::path& manifest_path) {
  const CampaignManifest m = manifest_from_json(read_json(manifest_path));
  const fs::path root = manifest_path.parent_path();
  std::vector<std::string> problems;
  auto check = [&](const ManifestEntry& e) {
    fs::path p = e.path;
    if (p.is_relative()) p = root / p;
    if (!fs::exists(p)) {
      problems.push_back("missing: " + e.path);
    } else if (file_digest(p) != e.sha256) {
      problems.push_back("digest mismatch: " + e.path);
    }
  };
  for (const auto& e : m.instances) check(e);
  for (const auto& e : m.results) check(e);
  return problems;
}

}  // namespace ratlab
