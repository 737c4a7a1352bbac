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

#include "ratlab/knapsack.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ratlab/error.hpp"

namespace ratlab {

int KnapsackInstance::total_value() const {
  return std::accumulate(items.begin(), items.end(), 0,
                         [](int acc, const Item& it) { return acc + it.value; });
}

int KnapsackInstance::total_weight() const {
  return std::accumulate(items.begin(), items.end(), 0,
                         [](int acc, const Item& it) { return acc + it.weight; });
}

void validate(const KnapsackInstance& instance) {
  require(!instance.items.empty(), ErrorKind::data,
          "instance '" + instance.name + "' has no items");
  for (const auto& item : instance.items) {
    require(item.value >= 1 && item.weight >= 1, ErrorKind::data,
            "instance '" + instance.name +
                "': item values and weights must be positive");
  }
  require(instance.capacity >= 1, ErrorKind::data,
          "instance '" + instance.name + "': capacity must be >= 1");
}

int slack_bit_count(int capacity) {
  require(capacity >= 1, ErrorKind::invalid_argument,
          "invalid capacity: must be >= 1");
  return std::bit_width(static_cast<unsigned>(capacity));
}

std::vector<int> slack_coefficients(int capacity) {
  const int s = slack_bit_count(capacity);
  std::vector<int> coefficients(static_cast<std::size_t>(s));
  for (int j = 0; j + 1 < s; ++j) coefficients[static_cast<std::size_t>(j)] = 1 << j;
  coefficients.back() = capacity - ((1 << (s - 1)) - 1);
  return coefficients;
}

Bitstring slack_encoding(int capacity, int residual) {
  require(residual >= 0 && residual <= capacity, ErrorKind::invalid_argument,
          "slack residual outside [0, capacity]");
  const auto coefficients = slack_coefficients(capacity);
  const std::size_t s = coefficients.size();
  Bitstring bits(s);
  int rest = residual;
  const int low_max = (1 << (s - 1)) - 1;
  if (rest > low_max) {
    bits.set(s - 1, true);
    rest -= coefficients.back();
  }
  for (std::size_t j = 0; j + 1 < s; ++j) bits.set(j, (rest >> j) & 1);
  return bits;
}

double default_penalty(const KnapsackInstance& instance) {
  return 1.0 + instance.total_value();
}

double linear_impact(const KnapsackInstance& instance, double penalty,
                     std::size_t item_index) {
  require(item_index < instance.items.size(), ErrorKind::invalid_argument,
          "item index out of range");
  const auto& item = instance.items[item_index];
  const double w = item.weight;
  return -item.value + penalty * w * w - 2.0 * penalty * instance.capacity * w;
}

Selection decode(const KnapsackInstance& instance, const Bitstring& x) {
  const std::size_t n = instance.items.size();
  require(x.size() == n + static_cast<std::size_t>(slack_bit_count(instance.capacity)),
          ErrorKind::dimension, "bitstring length does not match the model");
  Selection out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    out.chosen.push_back(i);
    out.total_value += instance.items[i].value;
    out.total_weight += instance.items[i].weight;
  }
  out.feasible = out.total_weight <= instance.capacity;
  return out;
}

Bitstring canonical_bitstring(const KnapsackInstance& instance,
                              const Bitstring& item_bits) {
  require(item_bits.size() == instance.items.size(), ErrorKind::dimension,
          "item selection length does not match the instance");
  int weight = 0;
  for (std::size_t i = 0; i < item_bits.size(); ++i) {
    if (item_bits[i]) weight += instance.items[i].weight;
  }
  const int residual = std::max(0, instance.capacity - weight);
  return concat(item_bits, slack_encoding(instance.capacity, residual));
}

}  // namespace ratlab
