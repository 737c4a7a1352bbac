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
#include <optional>

#include "ratlab/bitstring.hpp"
#include "ratlab/error.hpp"
#include "ratlab/knapsack.hpp"

namespace ratlab {

// Quadratic binary objective
//   E(x) = offset + sum_i linear_i x_i + sum_{i<j} quadratic(i,j) x_i x_j.
// Only the strict upper triangle of `quadratic` is used; diagonal terms live
// in `linear`.
struct QuboModel {
  Eigen::VectorXd linear;
  Eigen::MatrixXd quadratic;
  double offset = 0.0;
  int item_count = 0;
  int slack_count = 0;
  double penalty = 0.0;

  Eigen::Index num_vars() const { return linear.size(); }

  // Plain model without knapsack structure (item_count = num_vars).
  static QuboModel zero(Eigen::Index num_vars);
};

// Spin form with z = 1 - 2x:
//   E(z) = offset + sum_i h_i z_i + sum_{i<j} J(i,j) z_i z_j.
struct IsingModel {
  Eigen::VectorXd h;
  Eigen::MatrixXd J;
  double offset = 0.0;

  Eigen::Index num_spins() const { return h.size(); }
};

// Minimize -sum v_i x_i + M (sum w_i x_i + sum c_j y_j - W)^2 with the bounded
// binary slack y. Default M is default_penalty(instance).
QuboModel build_qubo(const KnapsackInstance& instance,
                     std::optional<double> penalty = std::nullopt);

// Exact substitution x_i = (1 - z_i) / 2.
IsingModel qubo_to_ising(const QuboModel& model);

// Quadratic form on any 0/1 vector expression.
template <typename Derived>
double energy(const QuboModel& model, const Eigen::MatrixBase<Derived>& x) {
  require(x.size() == model.num_vars(), ErrorKind::dimension,
          "bitstring length does not match the model");
  const Eigen::VectorXd xd = x.template cast<double>();
  return model.offset + model.linear.dot(xd) +
         xd.dot(model.quadratic.triangularView<Eigen::StrictlyUpper>() * xd);
}

double energy(const QuboModel& model, const Bitstring& x);

// Spin energy; spins are +1/-1 entries.
template <typename Derived>
double ising_energy(const IsingModel& model, const Eigen::MatrixBase<Derived>& z) {
  require(z.size() == model.num_spins(), ErrorKind::dimension,
          "spin vector length does not match the model");
  const Eigen::VectorXd zd = z.template cast<double>();
  return model.offset + model.h.dot(zd) +
         zd.dot(model.J.triangularView<Eigen::StrictlyUpper>() * zd);
}

// Spin image z = 1 - 2x.
Eigen::VectorXd to_spins(const Bitstring& x);

// Energies of all 2^n basis states, indexed by Bitstring::to_index order.
Eigen::VectorXd energy_table(const QuboModel& model);
Eigen::VectorXd energy_table(const IsingModel& model);

}  // namespace ratlab
