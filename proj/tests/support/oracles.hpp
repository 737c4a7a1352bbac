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

// Reference computations used to check the library. Deliberately naive and
// written without calling into the code under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

struct Item {
  int v;
  int w;
};

// 0/1 knapsack by dynamic programming over capacity.
inline int dp_knapsack(const std::vector<Item>& items, int capacity) {
  std::vector<int> best(static_cast<std::size_t>(capacity) + 1, 0);
  for (const auto& it : items) {
    for (int c = capacity; c >= it.w; --c) {
      best[c] = std::max(best[c], best[c - it.w] + it.v);
    }
  }
  return best[capacity];
}

// Coefficients of the bounded binary slack encoding.
inline std::vector<int> slack_coeffs(int capacity) {
  int s = 0;
  while ((1 << s) <= capacity) ++s;
  std::vector<int> c;
  for (int j = 0; j + 1 < s; ++j) c.push_back(1 << j);
  c.push_back(capacity - ((1 << (s - 1)) - 1));
  return c;
}

// Penalized objective evaluated straight from its definition.
inline double objective(const std::vector<Item>& items, int capacity, double penalty,
                        const std::vector<int>& x) {
  const auto c = slack_coeffs(capacity);
  double profit = 0.0;
  double load = -capacity;
  for (std::size_t i = 0; i < items.size(); ++i) {
    profit += items[i].v * x[i];
    load += items[i].w * x[i];
  }
  for (std::size_t j = 0; j < c.size(); ++j) load += c[j] * x[items.size() + j];
  return -profit + penalty * load * load;
}

inline std::vector<int> bits_of(std::uint64_t index, std::size_t n) {
  std::vector<int> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<int>((index >> i) & 1U);
  return x;
}

// Ranks with ties averaged, by counting rather than sorting.
inline std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double below = 0;
    double equal = 0;
    for (double u : v) {
      if (u < v[i]) below += 1;
      if (u == v[i]) equal += 1;
    }
    r[i] = below + (equal + 1) / 2.0;
  }
  return r;
}

// Pearson correlation of the rank vectors.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i] / n;
    my += ry[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Dense transverse-field Hamiltonian A*(-sum X) + B*diag(e).
inline Eigen::MatrixXcd dense_hamiltonian(const Eigen::VectorXd& diag, int n, double a, double b) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    h(k, k) = b * diag(k);
    for (int q = 0; q < n; ++q) h(k ^ (Eigen::Index{1} << q), k) += -a;
  }
  return h;
}

// Classical RK4 on i d/dt psi = H(t) psi with H(t) = A(s)H0 + B(s)H1,
// s piecewise linear. Used only on a handful of qubits with tiny steps.
template <typename SOfT, typename Amp>
Eigen::VectorXcd rk4_evolve(const Eigen::VectorXd& diag, int n, Eigen::VectorXcd psi,
                            double duration, SOfT s_of_t, Amp amp, int steps) {
  const std::complex<double> minus_i(0.0, -1.0);
  const double dt = duration / steps;
  auto deriv = [&](double t, const Eigen::VectorXcd& y) {
    const auto [a, b] = amp(s_of_t(t));
    return Eigen::VectorXcd(minus_i * (dense_hamiltonian(diag, n, a, b) * y));
  };
  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    const Eigen::VectorXcd k1 = deriv(t, psi);
    const Eigen::VectorXcd k2 = deriv(t + dt / 2, psi + dt / 2 * k1);
    const Eigen::VectorXcd k3 = deriv(t + dt / 2, psi + dt / 2 * k2);
    const Eigen::VectorXcd k4 = deriv(t + dt, psi + dt * k3);
    psi += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

inline std::vector<Item> random_items(std::mt19937& gen, int n, int lo = 1, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Item> items;
  for (int i = 0; i < n; ++i) items.push_back({d(gen), d(gen)});
  return items;
}

}  // namespace oracle
