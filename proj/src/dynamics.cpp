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

#include "ratlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ratlab/error.hpp"
#include "ratlab/rng.hpp"

namespace ratlab {

AmplitudeTable parse_amplitude_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorKind::data,
          "amplitude CSV is empty");
  line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
  require(line == "s,A,B", ErrorKind::data, "amplitude CSV header must be 's,A,B'");
  AmplitudeTable table;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double s = 0, a = 0, b = 0;
    require(static_cast<bool>(row >> s >> a >> b), ErrorKind::data,
            "amplitude CSV: malformed row '" + line + "'");
    table.s.push_back(s);
    table.a.push_back(a);
    table.b.push_back(b);
  }
  require(table.s.size() >= 2, ErrorKind::data, "amplitude CSV needs two rows");
  require(table.s.front() == 0.0 && table.s.back() == 1.0, ErrorKind::data,
          "amplitude CSV s grid must span [0, 1]");
  for (std::size_t i = 1; i < table.s.size(); ++i) {
    require(table.s[i] > table.s[i - 1], ErrorKind::data,
            "amplitude CSV s grid must be increasing");
  }
  return table;
}

AmplitudeTable load_amplitude_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::io, "cannot open amplitude CSV '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_amplitude_csv(buf.str());
}

Amplitudes amplitudes(const DriverSpec& driver, double s) {
  require(s >= 0.0 && s <= 1.0, ErrorKind::invalid_argument, "s outside [0, 1]");
  if (!driver.table) {
    return {driver.energy_scale * (1.0 - s), driver.energy_scale * s};
  }
  const auto& t = *driver.table;
  auto hi = std::lower_bound(t.s.begin(), t.s.end(), s);
  const auto k = static_cast<std::size_t>(hi - t.s.begin());
  if (t.s[k] == s) return {driver.energy_scale * t.a[k], driver.energy_scale * t.b[k]};
  const double w = (s - t.s[k - 1]) / (t.s[k] - t.s[k - 1]);
  return {driver.energy_scale * (t.a[k - 1] + w * (t.a[k] - t.a[k - 1])),
          driver.energy_scale * (t.b[k - 1] + w * (t.b[k] - t.b[k - 1]))};
}

void validate(const DriverSpec& driver) {
  require(driver.energy_scale > 0.0, ErrorKind::invalid_argument,
          "energy_scale must be positive");
  require(driver.time_scale > 0.0, ErrorKind::invalid_argument,
          "time_scale must be positive");
  if (!driver.table) return;
  const auto& t = *driver.table;
  require(t.a.front() > 0.0 && t.b.back() > 0.0, ErrorKind::invalid_argument,
          "amplitudes need A(0) > 0 and B(1) > 0");
  for (std::size_t i = 1; i < t.s.size(); ++i) {
    require(t.a[i] < t.a[i - 1] && t.b[i] > t.b[i - 1], ErrorKind::invalid_argument,
            "A must decrease and B increase along s");
  }
}

StateVector uniform_superposition(int num_qubits) {
  require(num_qubits >= 0 && num_qubits <= 30, ErrorKind::size, "too many qubits");
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return StateVector::Constant(dim, std::complex<double>(1.0 / std::sqrt(double(dim)), 0.0));
}

StateVector basis_state(const Bitstring& bits) {
  require(bits.size() <= 30, ErrorKind::size, "too many qubits");
  StateVector psi = StateVector::Zero(Eigen::Index{1} << bits.size());
  psi[static_cast<Eigen::Index>(bits.to_index())] = 1.0;
  return psi;
}

Eigen::VectorXd probabilities(const StateVector& state) {
  return state.cwiseAbs2();
}

namespace {

// Distinct diagonal energies and the level of every basis state.
struct Levels {
  std::vector<std::uint32_t> of_state;
  std::vector<double> energy;
};

Levels energy_levels(const Eigen::VectorXd& table) {
  const std::size_t dim = static_cast<std::size_t>(table.size());
  std::vector<std::uint32_t> order(dim);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return table[a] < table[b] || (table[a] == table[b] && a < b);
  });
  Levels out;
  out.of_state.resize(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const double e = table[order[r]];
    if (out.energy.empty() || e != out.energy.back()) out.energy.push_back(e);
    out.of_state[order[r]] = static_cast<std::uint32_t>(out.energy.size() - 1);
  }
  return out;
}

// Split real/imaginary storage; the kernels below vectorize on it.
struct SplitState {
  std::vector<double> re;
  std::vector<double> im;
  int qubits = 0;

  std::size_t dim() const { return re.size(); }

  double norm() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < re.size(); ++i) acc += re[i] * re[i] + im[i] * im[i];
    return std::sqrt(acc);
  }
};

// exp(i theta X_k) on [begin, end), a range aligned to 2^(k+1).
void rotate_qubit(double* __restrict re, double* __restrict im, std::size_t begin,
                  std::size_t end, int k, double c, double s) {
  const std::size_t stride = std::size_t{1} << k;
  for (std::size_t base = begin; base < end; base += 2 * stride) {
    double* __restrict ar = re + base;
    double* __restrict ai = im + base;
    double* __restrict br = re + base + stride;
    double* __restrict bi = im + base + stride;
    for (std::size_t j = 0; j < stride; ++j) {
      const double xr = ar[j], xi = ai[j], yr = br[j], yi = bi[j];
      ar[j] = c * xr - s * yi;
      ai[j] = c * xi + s * yr;
      br[j] = c * yr - s * xi;
      bi[j] = c * yi + s * xr;
    }
  }
}

constexpr int kBlockQubits = 15;

// Optionally multiplies by the diagonal phase, then applies exp(i theta X_k)
// on every qubit. Low qubits are handled per cache-sized block.
void diag_then_mix(SplitState& st, const Levels* levels, const std::vector<double>* cos_l,
                   const std::vector<double>* sin_l, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const int low = std::min(st.qubits, kBlockQubits);
  const std::size_t block = std::size_t{1} << low;
  double* re = st.re.data();
  double* im = st.im.data();
  for (std::size_t begin = 0; begin < st.dim(); begin += block) {
    const std::size_t end = begin + block;
    if (levels) {
      const std::uint32_t* lv = levels->of_state.data();
      const double* cl = cos_l->data();
      const double* sl = sin_l->data();
      for (std::size_t i = begin; i < end; ++i) {
        const double pc = cl[lv[i]], ps = sl[lv[i]];
        const double xr = re[i], xi = im[i];
        // multiply by exp(-i phi) = pc - i ps
        re[i] = xr * pc + xi * ps;
        im[i] = xi * pc - xr * ps;
      }
    }
    if (theta != 0.0) {
      for (int k = 0; k < low; ++k) rotate_qubit(re, im, begin, end, k, c, s);
    }
  }
  if (theta == 0.0) return;
  for (int k = low; k < st.qubits; ++k) rotate_qubit(re, im, 0, st.dim(), k, c, s);
}

struct Substep {
  double dt = 0.0;     // physical time
  double t_mid = 0.0;  // schedule time for the frozen Hamiltonian
};

std::vector<Substep> plan_substeps(const AnnealSchedule& schedule, const DriverSpec& driver,
                                   const StepControl& control, double omega) {
  static const double kCbrt2 = std::cbrt(2.0);
  static const double kW1 = 1.0 / (2.0 - kCbrt2);
  static const double kW0 = -kCbrt2 / (2.0 - kCbrt2);

  std::vector<Substep> out;
  const auto& p = schedule.points;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double t0 = p[i].t;
    const double t1 = p[i + 1].t;
    const double span = t1 - t0;
    const double phase = span * driver.time_scale * omega;
    const auto m = static_cast<std::size_t>(std::max(1.0, std::ceil(phase / control.max_phase)));
    const double h = span / static_cast<double>(m);
    for (std::size_t j = 0; j < m; ++j) {
      double t = t0 + static_cast<double>(j) * h;
      if (control.order == 2) {
        out.push_back({h * driver.time_scale, std::clamp(t + h / 2, t0, t1)});
        continue;
      }
      for (double w : {kW1, kW0, kW1}) {
        out.push_back({w * h * driver.time_scale, std::clamp(t + w * h / 2, t0, t1)});
        t += w * h;
      }
    }
  }
  return out;
}

void check_schedule_basics(const AnnealSchedule& schedule) {
  const auto& p = schedule.points;
  require(p.size() >= 2 && p.front().t == 0.0, ErrorKind::invalid_argument,
          "schedule must start at t = 0 with at least two points");
  for (std::size_t i = 0; i < p.size(); ++i) {
    require(p[i].s >= 0.0 && p[i].s <= 1.0, ErrorKind::invalid_argument,
            "schedule s out of range");
    if (i) {
      require(p[i].t > p[i - 1].t, ErrorKind::invalid_argument,
              "schedule times must increase");
    }
  }
}

}  // namespace

Evolution evolve(const IsingModel& ising, const AnnealSchedule& schedule,
                 const StateVector& initial, const DriverSpec& driver,
                 const StepControl& control) {
  const int n = static_cast<int>(ising.num_spins());
  require(n >= 1, ErrorKind::invalid_argument, "evolution needs at least one qubit");
  require(n <= control.qubit_cap, ErrorKind::size,
          std::to_string(n) + " qubits exceed the cap of " +
              std::to_string(control.qubit_cap));
  require(initial.size() == (Eigen::Index{1} << n), ErrorKind::dimension,
          "initial state dimension does not match the model");
  require(std::abs(initial.norm() - 1.0) <= 1e-6, ErrorKind::invalid_argument,
          "initial state is not normalized");
  require(control.order == 2 || control.order == 4, ErrorKind::invalid_argument,
          "integrator order must be 2 or 4");
  require(control.max_phase > 0.0, ErrorKind::invalid_argument,
          "max_phase must be positive");
  validate(driver);
  check_schedule_basics(schedule);

  const Eigen::MatrixXd upper = ising.J.triangularView<Eigen::StrictlyUpper>();
  double scale = 1.0;
  if (driver.autoscale) {
    const double peak = std::max(ising.h.cwiseAbs().maxCoeff(), upper.cwiseAbs().maxCoeff());
    if (peak > 0.0) scale = 1.0 / peak;
  }

  // Levels come from the unscaled table so exact ties survive; the scale and
  // reference shift only touch the per-level energies.
  Levels levels = energy_levels(energy_table(ising));
  const double ref = levels.energy.front();
  for (auto& e : levels.energy) e = (e - ref) * scale;

  const Eigen::MatrixXd sym = upper + upper.transpose();
  const double local_norm =
      ((ising.h.cwiseAbs() + sym.cwiseAbs().rowwise().sum()) * scale).maxCoeff();
  double max_a = driver.energy_scale;
  double max_b = driver.energy_scale;
  if (driver.table) {
    max_a = driver.energy_scale * *std::max_element(driver.table->a.begin(), driver.table->a.end());
    max_b = driver.energy_scale * *std::max_element(driver.table->b.begin(), driver.table->b.end());
  }
  const double omega = std::max(max_a + max_b * local_norm, 1e-12);
  const auto substeps = plan_substeps(schedule, driver, control, omega);

  // Per substep: driver half-angle (H_0 = -sum X gives exp(+i A dt/2 sum X))
  // and problem phase B dt.
  std::vector<double> half(substeps.size());
  std::vector<double> bdt(substeps.size());
  for (std::size_t j = 0; j < substeps.size(); ++j) {
    const Amplitudes amp = amplitudes(driver, s_at(schedule, substeps[j].t_mid));
    half[j] = amp.a * substeps[j].dt / 2.0;
    bdt[j] = amp.b * substeps[j].dt;
  }

  SplitState st;
  st.qubits = n;
  st.re.resize(static_cast<std::size_t>(initial.size()));
  st.im.resize(static_cast<std::size_t>(initial.size()));
  for (Eigen::Index i = 0; i < initial.size(); ++i) {
    st.re[static_cast<std::size_t>(i)] = initial[i].real();
    st.im[static_cast<std::size_t>(i)] = initial[i].imag();
  }
  const double norm0 = st.norm();

  double drift = 0.0;
  auto check_norm = [&] {
    const double d = std::abs(st.norm() - norm0);
    drift = std::max(drift, d);
    require(d <= control.norm_tolerance, ErrorKind::accuracy,
            "norm drift " + std::to_string(d) +
                " exceeds tolerance; reduce the integration step");
  };

  // X(h_0) D_0 X(h_0 + h_1) D_1 ... D_last X(h_last): adjacent driver
  // half-steps are merged and fused with the preceding diagonal pass.
  std::vector<double> cos_l(levels.energy.size());
  std::vector<double> sin_l(levels.energy.size());
  if (!substeps.empty()) diag_then_mix(st, nullptr, nullptr, nullptr, half.front());
  for (std::size_t j = 0; j < substeps.size(); ++j) {
    for (std::size_t l = 0; l < levels.energy.size(); ++l) {
      const double phi = bdt[j] * levels.energy[l];
      cos_l[l] = std::cos(phi);
      sin_l[l] = std::sin(phi);
    }
    const double theta = half[j] + (j + 1 < substeps.size() ? half[j + 1] : 0.0);
    diag_then_mix(st, &levels, &cos_l, &sin_l, theta);
    if ((j + 1) % 64 == 0) check_norm();
  }
  check_norm();

  Evolution out;
  out.norm_drift = drift;
  out.steps = substeps.size();
  out.state.resize(initial.size());
  const double inv = 1.0 / st.norm();
  for (std::size_t i = 0; i < st.dim(); ++i) {
    out.state[static_cast<Eigen::Index>(i)] = {st.re[i] * inv, st.im[i] * inv};
  }
  return out;
}

Distribution forward_distribution(const QuboModel& model, double total_time,
                                  const DriverSpec& driver, const StepControl& control) {
  const Evolution ev = evolve(qubo_to_ising(model), make_forward(total_time),
                              uniform_superposition(static_cast<int>(model.num_vars())),
                              driver, control);
  return {probabilities(ev.state), ev.norm_drift, ev.steps};
}

Distribution reverse_distribution(const QuboModel& model, const Bitstring& initial_bits,
                                  const AnnealSchedule& schedule, const DriverSpec& driver,
                                  const StepControl& control) {
  require(schedule.kind == ScheduleKind::reverse, ErrorKind::invalid_argument,
          "reverse anneal needs a reverse schedule");
  const auto violations = validate(schedule);
  require(violations.empty(), ErrorKind::invalid_argument,
          "invalid reverse schedule: " + (violations.empty() ? "" : violations.front()));
  require(static_cast<Eigen::Index>(initial_bits.size()) == model.num_vars(),
          ErrorKind::dimension, "initial bitstring length does not match the model");
  const Evolution ev = evolve(qubo_to_ising(model), schedule, basis_state(initial_bits),
                              driver, control);
  return {probabilities(ev.state), ev.norm_drift, ev.steps};
}

SampleSet sample_distribution(const QuboModel& model, const Eigen::VectorXd& probs,
                              int reads, std::uint64_t seed, std::string backend) {
  require(reads >= 1, ErrorKind::invalid_argument, "reads must be >= 1");
  require(probs.size() == (Eigen::Index{1} << model.num_vars()), ErrorKind::dimension,
          "distribution size does not match the model");
  std::vector<double> cdf(static_cast<std::size_t>(probs.size()));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[static_cast<std::size_t>(i)] = acc;
  }
  Rng rng(seed);
  std::vector<Bitstring> draws;
  draws.reserve(static_cast<std::size_t>(reads));
  const auto n = static_cast<std::size_t>(model.num_vars());
  for (int r = 0; r < reads; ++r) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    draws.push_back(Bitstring::from_index(static_cast<std::uint64_t>(it - cdf.begin()), n));
  }
  return aggregate_reads(model, draws, std::move(backend), seed);
}

double expected_energy(const QuboModel& model, const Eigen::VectorXd& probs) {
  return probs.dot(energy_table(model)) / probs.sum();
}

SampleSet forward_anneal(const QuboModel& model, double total_time, int reads,
                         const DriverSpec& driver, std::uint64_t seed,
                         const StepControl& control) {
  require(reads >= 1, ErrorKind::invalid_argument, "reads must be >= 1");
  const auto dist = forward_distribution(model, total_time, driver, control);
  return sample_distribution(model, dist.probabilities, reads, seed);
}

SampleSet reverse_anneal(const QuboModel& model, const Bitstring& initial_bits,
                         const AnnealSchedule& schedule, int reads,
                         const DriverSpec& driver, std::uint64_t seed,
                         const StepControl& control) {
  require(reads >= 1, ErrorKind::invalid_argument, "reads must be >= 1");
  const auto dist = reverse_distribution(model, initial_bits, schedule, driver, control);
  return sample_distribution(model, dist.probabilities, reads, seed);
}

}  // namespace ratlab
