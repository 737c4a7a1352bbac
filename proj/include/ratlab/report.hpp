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
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ratlab/error.hpp"
#include "ratlab/experiment.hpp"

namespace ratlab {

// Average ranks (1-based) with ties sharing the mean of their positions.
template <typename Derived>
Eigen::VectorXd average_ranks(const Eigen::MatrixBase<Derived>& values) {
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });
  Eigen::VectorXd ranks(n);
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i;
    while (j + 1 < n && values(order[static_cast<std::size_t>(j + 1)]) ==
                            values(order[static_cast<std::size_t>(i)])) {
      ++j;
    }
    const double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (Eigen::Index k = i; k <= j; ++k) ranks(order[static_cast<std::size_t>(k)]) = mean_rank;
    i = j + 1;
  }
  return ranks;
}

// Spearman rank correlation: Pearson correlation of average ranks. NaN when
// either variable is constant.
template <typename DerivedX, typename DerivedY>
double spearman(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  require(x.size() == y.size(), ErrorKind::dimension, "spearman: length mismatch");
  require(x.size() >= 2, ErrorKind::data, "spearman: need at least two pairs");
  const Eigen::VectorXd rx = average_ranks(x);
  const Eigen::VectorXd ry = average_ranks(y);
  const Eigen::VectorXd dx = rx.array() - rx.mean();
  const Eigen::VectorXd dy = ry.array() - ry.mean();
  const double denom = std::sqrt(dx.squaredNorm() * dy.squaredNorm());
  if (denom == 0.0) return std::nan("");
  return std::clamp(dx.dot(dy) / denom, -1.0, 1.0);
}

struct TableArtifact {
  std::string markdown;
  std::string csv;
  std::size_t rows = 0;
};

// Integral energies print without decimals, others in shortest form.
std::string format_energy(double value);

// "9 (7, 2)"
std::string format_hamming(const Hamming& h);

// Instance | Best energy | Energy wrt. parent "E (gap)" | Hamming "h (n_h, s_h)".
TableArtifact emit_benchmark_table(const std::vector<BaselineRecord>& records);

// Per target: the control row "--" first, then one row per source with the
// tuple "(best, avg, std)". A value is flagged (bold) when it is <= the
// control's value.
TableArtifact emit_transfer_table(const std::vector<TransferRecord>& records);

enum class SortKey { energy_gap, hamming };

std::string to_string(SortKey key);
SortKey parse_sort_key(const std::string& text);

struct BoxplotData {
  std::string csv;
  std::vector<std::string> groups;  // emission order, control first
  std::vector<std::string> warnings;
};

// Per-source run-best distributions ordered ascending by the source's
// closeness to the target (ties by name), the forward control first.
BoxplotData boxplot_data(const std::vector<TransferRecord>& transfers,
                         const std::vector<BaselineRecord>& baselines, SortKey key);

enum class Metric { energy_gap, hamming_total, hamming_items };

std::string to_string(Metric metric);

struct CorrelationReport {
  Metric metric = Metric::energy_gap;
  double spearman_rho = 0.0;
  int sample_count = 0;
};

// Spearman rho between each closeness metric of a source and its mean run best
// on the target. Needs at least 3 (source, target) pairs.
std::vector<CorrelationReport> correlation(const std::vector<TransferRecord>& transfers,
                                           const std::vector<BaselineRecord>& baselines);

}  // namespace ratlab
