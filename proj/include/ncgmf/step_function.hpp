#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "ncgmf/task_model.hpp"

namespace ncgmf {

struct Breakpoint {
  Time time = 0;
  Work value = 0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Non-decreasing, left-continuous, piecewise-constant demand curve.
//
// f(t) is the largest breakpoint value whose time is strictly less than t,
// or 0 if there is none; so f(0) == 0 and the jump recorded at time s is
// only visible for t > s. Breakpoints are kept canonical: strictly
// increasing in both time and value. Two functions are equal iff their
// breakpoint lists are equal.
class StepFunction {
 public:
  StepFunction() = default;

  // Takes breakpoints that are already canonical.
  explicit StepFunction(std::vector<Breakpoint> points)
      : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].time < 0 || points_[i].value < 0)
        throw std::invalid_argument("StepFunction: negative breakpoint");
      if (i > 0 && (points_[i].time <= points_[i - 1].time ||
                    points_[i].value <= points_[i - 1].value))
        throw std::invalid_argument(
            "StepFunction: breakpoints must strictly increase");
    }
  }

  // Upper envelope of arbitrary "raise to v for all x > t" requests, in any
  // order.
  static StepFunction from_raises(std::vector<Breakpoint> raises) {
    std::ranges::sort(raises, [](const Breakpoint& a, const Breakpoint& b) {
      return a.time != b.time ? a.time < b.time : a.value > b.value;
    });
    std::vector<Breakpoint> out;
    for (const auto& r : raises) {
      if (r.value <= 0) continue;
      if (!out.empty() && r.value <= out.back().value) continue;
      if (!out.empty() && r.time == out.back().time)
        out.back().value = r.value;
      else
        out.push_back(r);
    }
    StepFunction f;
    f.points_ = std::move(out);
    return f;
  }

  // Dense table form: values[t] == f(t) for t in [0, values.size()).
  static StepFunction from_samples(std::span<const Work> values) {
    std::vector<Breakpoint> raises;
    for (std::size_t t = 1; t < values.size(); ++t)
      raises.push_back({static_cast<Time>(t) - 1, values[t]});
    return from_raises(std::move(raises));
  }

  Work operator()(Time t) const {
    auto it = std::ranges::lower_bound(points_, t, {}, &Breakpoint::time);
    return it == points_.begin() ? 0 : std::prev(it)->value;
  }

  std::span<const Breakpoint> breakpoints() const noexcept { return points_; }
  bool empty() const noexcept { return points_.empty(); }

  // Same function on [0, horizon]; breakpoints at or past horizon dropped.
  StepFunction truncated(Time horizon) const {
    StepFunction f;
    for (const auto& p : points_) {
      if (p.time >= horizon) break;
      f.points_.push_back(p);
    }
    return f;
  }

  friend StepFunction max(const StepFunction& a, const StepFunction& b) {
    std::vector<Breakpoint> all(a.points_);
    all.insert(all.end(), b.points_.begin(), b.points_.end());
    return from_raises(std::move(all));
  }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<Breakpoint> points_;
};

inline std::ostream& operator<<(std::ostream& os, const StepFunction& f) {
  os << '{';
  const char* sep = "";
  for (const auto& p : f.breakpoints()) {
    os << sep << '(' << p.time << ',' << p.value << ')';
    sep = ",";
  }
  return os << '}';
}

// CSV with header `time,value`, one row per breakpoint.
inline void write_csv(std::ostream& os, const StepFunction& f) {
  os << "time,value\n";
  for (const auto& p : f.breakpoints()) os << p.time << ',' << p.value << '\n';
}

}  // namespace ncgmf
