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

#include <string>
#include <string_view>
#include <vector>

namespace ratlab {

struct SchedulePoint {
  double t = 0.0;  // schedule time units
  double s = 0.0;  // annealing fraction in [0, 1]

  bool operator==(const SchedulePoint&) const = default;
};

enum class ScheduleKind { forward, reverse };

// Piecewise-linear control trajectory s(t).
struct AnnealSchedule {
  std::vector<SchedulePoint> points;
  ScheduleKind kind = ScheduleKind::forward;

  double duration() const { return points.empty() ? 0.0 : points.back().t; }
  bool operator==(const AnnealSchedule&) const = default;
};

// Reverse-schedule parameters: dip depth and ramp / pause / quench times.
struct ReverseParams {
  double s_p = 0.5;
  double t_ramp = 0.0;
  double t_pause = 0.0;
  double t_quench = 0.0;

  bool operator==(const ReverseParams&) const = default;
};

// [(0, 0), (T, 1)]
AnnealSchedule make_forward(double total_time);

// [(0, 1), (t_r, s_p), (t_r + t_p, s_p), (t_r + t_p + t_q, 1)]; a zero pause
// yields the three-point V shape.
AnnealSchedule make_reverse(double s_p, double t_ramp, double t_pause,
                            double t_quench);
AnnealSchedule make_reverse(const ReverseParams& params);

// Structural inverse of make_reverse. Throws unless `schedule` is a valid
// reverse schedule.
ReverseParams reverse_params(const AnnealSchedule& schedule);

// Linear interpolation; exact at control points.
double s_at(const AnnealSchedule& schedule, double t);

// Every invariant violation, empty when valid.
std::vector<std::string> validate(const AnnealSchedule& schedule);

// "[(0.0, 1.0), (2.5, 0.5), (102.5, 0.5), (102.75, 1.0)]"; numbers use the
// shortest round-trip form with a trailing ".0" on integral values.
std::string format_schedule(const AnnealSchedule& schedule);

// Parses the list-of-pairs text form (whitespace tolerant). The kind is
// inferred from the first point: s = 0 forward, otherwise reverse. The result
// is validated.
AnnealSchedule parse_schedule(std::string_view text);

// Shortest round-trip decimal, always with a '.' or exponent.
std::string format_real(double value);

}  // namespace ratlab
