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

#include "ratlab/sample_set.hpp"

#include <algorithm>
#include <map>

#include "ratlab/error.hpp"

namespace ratlab {

const SampleRecord& SampleSet::lowest() const {
  require(!records.empty(), ErrorKind::data, "empty sample set");
  return records.front();
}

double SampleSet::mean_energy() const {
  require(total_reads > 0, ErrorKind::data, "empty sample set");
  double acc = 0.0;
  for (const auto& r : records) acc += r.energy * r.count;
  return acc / total_reads;
}

SampleSet aggregate_reads(const QuboModel& model, const std::vector<Bitstring>& reads,
                          std::string backend, std::uint64_t seed) {
  std::map<Bitstring, int> counts;
  for (const auto& r : reads) ++counts[r];
  SampleSet out;
  out.backend = std::move(backend);
  out.seed = seed;
  out.total_reads = static_cast<int>(reads.size());
  out.records.reserve(counts.size());
  for (const auto& [bits, count] : counts) {
    out.records.push_back({bits, energy(model, bits), count});
  }
  std::stable_sort(out.records.begin(), out.records.end(),
                   [](const SampleRecord& a, const SampleRecord& b) {
                     return a.energy < b.energy;
                   });
  return out;
}

}  // namespace ratlab
