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

#include "ratlab/qubo.hpp"

namespace ratlab {

QuboModel QuboModel::zero(Eigen::Index num_vars) {
  QuboModel m;
  m.linear = Eigen::VectorXd::Zero(num_vars);
  m.quadratic = Eigen::MatrixXd::Zero(num_vars, num_vars);
  m.item_count = static_cast<int>(num_vars);
  return m;
}

QuboModel build_qubo(const KnapsackInstance& instance,
                     std::optional<double> penalty) {
  validate(instance);
  const double m = penalty.value_or(default_penalty(instance));
  require(m > 0.0, ErrorKind::invalid_argument, "penalty must be positive");

  const auto slack = slack_coefficients(instance.capacity);
  const Eigen::Index n = static_cast<Eigen::Index>(instance.items.size());
  const Eigen::Index s = static_cast<Eigen::Index>(slack.size());

  // constraint row: sum_k a_k y_k == W over items then slack
  Eigen::VectorXd a(n + s);
  Eigen::VectorXd profit = Eigen::VectorXd::Zero(n + s);
  for (Eigen::Index i = 0; i < n; ++i) {
    a[i] = instance.items[static_cast<std::size_t>(i)].weight;
    profit[i] = instance.items[static_cast<std::size_t>(i)].value;
  }
  for (Eigen::Index j = 0; j < s; ++j) a[n + j] = slack[static_cast<std::size_t>(j)];

  const double cap = instance.capacity;
  QuboModel model;
  model.linear = -profit + m * (a.array().square() - 2.0 * cap * a.array()).matrix();
  model.quadratic = (2.0 * m * a * a.transpose())
                        .triangularView<Eigen::StrictlyUpper>();
  model.offset = m * cap * cap;
  model.item_count = static_cast<int>(n);
  model.slack_count = static_cast<int>(s);
  model.penalty = m;
  return model;
}

IsingModel qubo_to_ising(const QuboModel& model) {
  const Eigen::MatrixXd q = model.quadratic.triangularView<Eigen::StrictlyUpper>();
  const Eigen::MatrixXd sym = q + q.transpose();

  IsingModel ising;
  ising.J = q / 4.0;
  ising.h = -model.linear / 2.0 - sym.rowwise().sum() / 4.0;
  ising.offset = model.offset + model.linear.sum() / 2.0 + q.sum() / 4.0;
  return ising;
}

double energy(const QuboModel& model, const Bitstring& x) {
  require(static_cast<Eigen::Index>(x.size()) == model.num_vars(),
          ErrorKind::dimension, "bitstring length does not match the model");
  return energy(model, x.to_vector());
}

Eigen::VectorXd to_spins(const Bitstring& x) {
  return (1.0 - 2.0 * x.to_vector().array()).matrix();
}

namespace {

// Doubling construction: table[low | 1<<k] = table[low] + delta_k(low), with
// delta_k depending on the lower bits only. Each entry is a fixed-order sum of
// at most n increments, so there is no drift across the table.
template <typename Delta>
Eigen::VectorXd doubling_table(Eigen::Index n, double base, Delta&& delta) {
  require(n <= 30, ErrorKind::size, "energy table limited to 30 variables");
  Eigen::VectorXd table(Eigen::Index{1} << n);
  table[0] = base;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index half = Eigen::Index{1} << k;
    for (Eigen::Index low = 0; low < half; ++low) {
      table[low | half] = table[low] + delta(k, low);
    }
  }
  return table;
}

}  // namespace

Eigen::VectorXd energy_table(const QuboModel& model) {
  const Eigen::Index n = model.num_vars();
  return doubling_table(n, model.offset, [&](Eigen::Index k, Eigen::Index low) {
    double d = model.linear[k];
    for (Eigen::Index j = 0; j < k; ++j) {
      if ((low >> j) & 1) d += model.quadratic(j, k);
    }
    return d;
  });
}

Eigen::VectorXd energy_table(const IsingModel& model) {
  const Eigen::Index n = model.num_spins();
  // base state: all x = 0, i.e. all z = +1
  double base = model.offset + model.h.sum();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) base += model.J(i, j);
  return doubling_table(n, base, [&](Eigen::Index k, Eigen::Index low) {
    // flipping z_k from +1 to -1 with lower spins set by `low`, upper spins +1
    double field = model.h[k];
    for (Eigen::Index j = 0; j < k; ++j) {
      field += ((low >> j) & 1) ? -model.J(j, k) : model.J(j, k);
    }
    for (Eigen::Index j = k + 1; j < n; ++j) field += model.J(k, j);
    return -2.0 * field;
  });
}

}  // namespace ratlab
