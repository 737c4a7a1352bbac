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

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ratlab {

// Fixed-length assignment of binary variables. Position i is variable i; in a
// knapsack model the item variables come first, then the slack variables.
// Ordering is lexicographic on positions, position 0 most significant.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::size_t length) : bits_(length, 0) {}
  explicit Bitstring(std::vector<std::uint8_t> bits);

  // Parses a string of '0'/'1' characters.
  static Bitstring parse(std::string_view text);

  // Basis-state index convention: bit i of `index` is variable i.
  static Bitstring from_index(std::uint64_t index, std::size_t length);
  std::uint64_t to_index() const;

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string to_string() const;

  // 0/1 column vector, handy for quadratic-form evaluation.
  Eigen::VectorXd to_vector() const;

  auto operator<=>(const Bitstring&) const = default;
  bool operator==(const Bitstring&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Concatenation, e.g. item bits followed by slack bits.
Bitstring concat(const Bitstring& head, const Bitstring& tail);

}  // namespace ratlab
