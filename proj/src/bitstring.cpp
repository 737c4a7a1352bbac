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

#include "ratlab/bitstring.hpp"

#include "ratlab/error.hpp"

namespace ratlab {

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    require(b <= 1, ErrorKind::data, "bitstring entries must be 0 or 1");
  }
}

Bitstring Bitstring::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    require(c == '0' || c == '1', ErrorKind::data,
            "bitstring may only contain '0' and '1'");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return Bitstring(std::move(bits));
}

Bitstring Bitstring::from_index(std::uint64_t index, std::size_t length) {
  require(length <= 64, ErrorKind::size, "bitstring index limited to 64 bits");
  Bitstring out(length);
  for (std::size_t i = 0; i < length; ++i) out.bits_[i] = (index >> i) & 1U;
  return out;
}

std::uint64_t Bitstring::to_index() const {
  require(bits_.size() <= 64, ErrorKind::size,
          "bitstring index limited to 64 bits");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    index |= static_cast<std::uint64_t>(bits_[i]) << i;
  }
  return index;
}

std::string Bitstring::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

Eigen::VectorXd Bitstring::to_vector() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(bits_.size()));
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = bits_[i];
  }
  return v;
}

Bitstring concat(const Bitstring& head, const Bitstring& tail) {
  std::vector<std::uint8_t> bits = head.bits();
  bits.insert(bits.end(), tail.bits().begin(), tail.bits().end());
  return Bitstring(std::move(bits));
}

}  // namespace ratlab
