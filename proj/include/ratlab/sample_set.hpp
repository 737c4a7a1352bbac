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
#include <string>
#include <vector>

#include "ratlab/bitstring.hpp"
#include "ratlab/qubo.hpp"

namespace ratlab {

struct SampleRecord {
  Bitstring bits;
  double energy = 0.0;
  int count = 0;
};

// Multiset of reads from one sampler invocation. Records are distinct
// bitstrings ordered by (energy, bitstring), so the first record is the
// lowest-energy read with lexicographic tie-break.
struct SampleSet {
  std::vector<SampleRecord> records;
  int total_reads = 0;
  std::string backend;
  std::uint64_t seed = 0;

  const SampleRecord& lowest() const;
  double mean_energy() const;
};

// Builds a SampleSet from raw reads, scoring each distinct state on `model`.
SampleSet aggregate_reads(const QuboModel& model, const std::vector<Bitstring>& reads,
                          std::string backend, std::uint64_t seed);

}  // namespace ratlab
