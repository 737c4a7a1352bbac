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

#include "ratlab/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ratlab/error.hpp"

namespace ratlab {

AnnealSchedule make_forward(double total_time) {
  require(total_time > 0.0 && std::isfinite(total_time), ErrorKind::invalid_argument,
          "forward schedule needs a positive total time");
  return {{{0.0, 0.0}, {total_time, 1.0}}, ScheduleKind::forward};
}

AnnealSchedule make_reverse(double s_p, double t_ramp, double t_pause,
                            double t_quench) {
  require(s_p > 0.0 && s_p < 1.0, ErrorKind::invalid_argument,
          "reverse schedule needs 0 < s_p < 1");
  require(t_ramp > 0.0, ErrorKind::invalid_argument, "ramp time must be positive");
  require(t_pause >= 0.0, ErrorKind::invalid_argument,
          "pause time must be non-negative");
  require(t_quench > 0.0, ErrorKind::invalid_argument,
          "quench time must be positive");
  AnnealSchedule out;
  out.kind = ScheduleKind::reverse;
  out.points.push_back({0.0, 1.0});
  out.points.push_back({t_ramp, s_p});
  if (t_pause > 0.0) out.points.push_back({t_ramp + t_pause, s_p});
  out.points.push_back({t_ramp + t_pause + t_quench, 1.0});
  return out;
}

AnnealSchedule make_reverse(const ReverseParams& p) {
  return make_reverse(p.s_p, p.t_ramp, p.t_pause, p.t_quench);
}

ReverseParams reverse_params(const AnnealSchedule& schedule) {
  const auto violations = validate(schedule);
  require(violations.empty() && schedule.kind == ScheduleKind::reverse,
          ErrorKind::invalid_argument, "not a valid reverse schedule");
  const auto& p = schedule.points;
  ReverseParams out;
  out.s_p = p[1].s;
  out.t_ramp = p[1].t;
  if (p.size() == 4) {
    out.t_pause = p[2].t - p[1].t;
    out.t_quench = p[3].t - p[2].t;
  } else {
    out.t_pause = 0.0;
    out.t_quench = p[2].t - p[1].t;
  }
  return out;
}

double s_at(const AnnealSchedule& schedule, double t) {
  const auto& p = schedule.points;
  require(!p.empty(), ErrorKind::invalid_argument, "empty schedule");
  require(t >= p.front().t && t <= p.back().t, ErrorKind::invalid_argument,
          "time outside the schedule");
  auto hi = std::lower_bound(p.begin(), p.end(), t,
                             [](const SchedulePoint& q, double v) { return q.t < v; });
  if (hi->t == t) return hi->s;
  auto lo = hi - 1;
  const double w = (t - lo->t) / (hi->t - lo->t);
  return lo->s + w * (hi->s - lo->s);
}

std::vector<std::string> validate(const AnnealSchedule& schedule) {
  std::vector<std::string> out;
  const auto& p = schedule.points;
  if (p.size() < 2) {
    out.push_back("schedule needs at least two points");
    return out;
  }
  if (p.front().t != 0.0) out.push_back("first time must be 0");
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!(p[i].t > p[i - 1].t)) {
      out.push_back("non-monotone time");
      break;
    }
  }
  for (const auto& q : p) {
    if (!(q.s >= 0.0 && q.s <= 1.0) || !std::isfinite(q.t)) {
      out.push_back("s out of range");
      break;
    }
  }

  if (schedule.kind == ScheduleKind::forward) {
    if (p.front().s != 0.0) out.push_back("forward schedule must start at s = 0");
    if (p.back().s != 1.0) out.push_back("forward schedule must end at s = 1");
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (p[i].s < p[i - 1].s) {
        out.push_back("forward schedule s must be non-decreasing");
        break;
      }
    }
    return out;
  }

  if (p.front().s != 1.0) out.push_back("reverse schedule must start at s = 1");
  if (p.back().s != 1.0) out.push_back("reverse schedule must end at s = 1");
  const bool v_shape = p.size() == 3 && p[1].s < 1.0;
  const bool plateau = p.size() == 4 && p[1].s < 1.0 && p[1].s == p[2].s;
  if (!v_shape && !plateau) {
    out.push_back("reverse schedule must be ramp, optional pause, quench with a single dip s_p < 1");
  } else if (!(p[1].s > 0.0)) {
    out.push_back("reverse schedule dip s_p must be > 0");
  }
  return out;
}

std::string format_real(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  std::string s(buf, res.ptr);
  if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string format_schedule(const AnnealSchedule& schedule) {
  std::string out = "[";
  for (std::size_t i = 0; i < schedule.points.size(); ++i) {
    if (i) out += ", ";
    out += "(" + format_real(schedule.points[i].t) + ", " +
           format_real(schedule.points[i].s) + ")";
  }
  return out + "]";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    require(peek(c), ErrorKind::data,
            std::string("schedule text: expected '") + c + "' at offset " +
                std::to_string(pos_));
    ++pos_;
  }
  double number() {
    skip_ws();
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    auto res = std::from_chars(begin, text_.data() + text_.size(), v);
    require(res.ec == std::errc(), ErrorKind::data,
            "schedule text: expected a number at offset " + std::to_string(pos_));
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    return v;
  }
  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AnnealSchedule parse_schedule(std::string_view text) {
  Cursor c(text);
  AnnealSchedule out;
  c.expect('[');
  if (!c.peek(']')) {
    while (true) {
      c.expect('(');
      SchedulePoint q;
      q.t = c.number();
      c.expect(',');
      q.s = c.number();
      c.expect(')');
      out.points.push_back(q);
      if (c.peek(',')) {
        c.expect(',');
        continue;
      }
      break;
    }
  }
  c.expect(']');
  require(c.done(), ErrorKind::data, "schedule text: trailing characters");
  require(!out.points.empty(), ErrorKind::data, "schedule text: no points");
  out.kind = out.points.front().s == 0.0 ? ScheduleKind::forward : ScheduleKind::reverse;
  const auto violations = validate(out);
  if (!violations.empty()) {
    std::string msg = "invalid schedule:";
    for (const auto& v : violations) msg += " " + v + ";";
    fail(ErrorKind::data, msg);
  }
  return out;
}

}  // namespace ratlab
