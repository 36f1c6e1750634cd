#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgmf/step_function.hpp"
#include "ncgmf/task_model.hpp"

namespace ncgmf {

// Finite prefix of a scenario: the configuration index (0-based) of each
// successive job. Read as a dense scenario, job k+1 arrives exactly the
// minimum separation of job k after it, starting at time 0.
struct ScenarioPrefix {
  std::vector<std::size_t> configs;

  friend bool operator==(const ScenarioPrefix&, const ScenarioPrefix&) = default;
};

// The prefix ends before the queried time; extend it and retry.
class PrefixTooShort : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline void check_prefix(const Task& task, const ScenarioPrefix& prefix) {
  for (auto k : prefix.configs) {
    if (k >= task.size())
      throw std::out_of_range("scenario index " + std::to_string(k + 1) +
                              " out of range for task '" + task.name() + "'");
  }
}

// Sum of minimum separations over the prefix.
inline Time prefix_span(const Task& task, const ScenarioPrefix& prefix) {
  Time span = 0;
  for (auto k : prefix.configs) span += task.config(k).t;
  return span;
}

// Demand requested in [0, t) by the dense scenario: the work of the first
// alpha(t) jobs, alpha(t) being the least count whose separations sum to
// at least t.
inline Work rbf_eval(const Task& task, const ScenarioPrefix& prefix, Time t) {
  check_prefix(task, prefix);
  Time elapsed = 0;
  Work demand = 0;
  for (auto k : prefix.configs) {
    if (elapsed >= t) return demand;
    elapsed += task.config(k).t;
    demand += task.config(k).c;
  }
  if (elapsed < t)
    throw PrefixTooShort("scenario prefix of task '" + task.name() +
                         "' covers " + std::to_string(elapsed) +
                         " < " + std::to_string(t));
  return demand;
}

// rbf of the prefix on [0, horizon] as a step function: job k+1 arrives at
// s_k (s_0 = 0) and lifts the curve right after s_k.
inline StepFunction rbf_step_function(const Task& task,
                                      const ScenarioPrefix& prefix,
                                      Time horizon) {
  check_prefix(task, prefix);
  std::vector<Breakpoint> points;
  Time arrival = 0;
  Work demand = 0;
  for (auto k : prefix.configs) {
    if (arrival >= horizon) break;
    demand += task.config(k).c;
    points.push_back({arrival, demand});
    arrival += task.config(k).t;
  }
  if (arrival < horizon)
    throw PrefixTooShort("scenario prefix of task '" + task.name() +
                         "' covers " + std::to_string(arrival) + " < horizon " +
                         std::to_string(horizon));
  return StepFunction(std::move(points));
}

}  // namespace ncgmf
