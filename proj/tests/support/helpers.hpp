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

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ratlab/knapsack.hpp"

namespace testing {

inline ratlab::KnapsackInstance make_instance(const std::vector<oracle::Item>& items, int capacity,
                                              std::string name = "t") {
  ratlab::KnapsackInstance inst;
  inst.name = std::move(name);
  for (const auto& it : items) inst.items.push_back({it.v, it.w});
  inst.capacity = capacity;
  return inst;
}

inline std::vector<oracle::Item> items_of(const ratlab::KnapsackInstance& inst) {
  std::vector<oracle::Item> out;
  for (const auto& it : inst.items) out.push_back({it.value, it.weight});
  return out;
}

// Random instance with W = floor(sum w / 2), at least 1.
inline ratlab::KnapsackInstance random_instance(std::mt19937& gen, int n) {
  const auto items = oracle::random_items(gen, n);
  int total = 0;
  for (const auto& it : items) total += it.w;
  return make_instance(items, std::max(1, total / 2));
}

}  // namespace testing
