#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace ncgmf {

// Time instants, separations, deadlines and demands are all integral.
using Time = std::int64_t;
using Work = std::int64_t;

// Exact slope (demand per time unit).
using Slope = boost::rational<std::int64_t>;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One frame configuration: execution requirement, relative deadline and
// minimum separation to the next frame of the same task.
struct TaskConfig {
  Work c = 1;
  Time d = 1;
  Time t = 1;

  friend bool operator==(const TaskConfig&, const TaskConfig&) = default;
};

// A non-cyclic multiframe task. Every job picks any of its configurations,
// in any order. Immutable once constructed.
class Task {
 public:
  Task(std::string name, std::vector<TaskConfig> configs, Time offset = 0)
      : name_(std::move(name)), configs_(std::move(configs)), offset_(offset) {
    if (configs_.empty())
      throw ValidationError("task '" + name_ + "': configs must be non-empty");
    if (offset_ < 0)
      throw ValidationError("task '" + name_ + "': offset must be >= 0");
    for (std::size_t k = 0; k < configs_.size(); ++k) {
      const auto& cfg = configs_[k];
      const auto where = "task '" + name_ + "' config " + std::to_string(k + 1);
      if (cfg.c < 1) throw ValidationError(where + ": c must be >= 1");
      if (cfg.d < 1) throw ValidationError(where + ": d must be >= 1");
      if (cfg.t < 1) throw ValidationError(where + ": t must be >= 1");
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::span<const TaskConfig> configs() const noexcept { return configs_; }
  const TaskConfig& config(std::size_t k) const { return configs_.at(k); }
  std::size_t size() const noexcept { return configs_.size(); }
  Time offset() const noexcept { return offset_; }

  Time max_deadline() const {
    return std::ranges::max(configs_, {}, &TaskConfig::d).d;
  }
  Time min_separation() const {
    return std::ranges::min(configs_, {}, &TaskConfig::t).t;
  }
  Time max_separation() const {
    return std::ranges::max(configs_, {}, &TaskConfig::t).t;
  }

  friend bool operator==(const Task&, const Task&) = default;

 private:
  std::string name_;
  std::vector<TaskConfig> configs_;
  Time offset_ = 0;
};

// Priority-ordered task list: index 0 has the highest priority.
class TaskSet {
 public:
  TaskSet() = default;

  explicit TaskSet(std::vector<Task> tasks) : tasks_(std::move(tasks)) {
    std::unordered_set<std::string> seen;
    for (const auto& task : tasks_) {
      if (!seen.insert(task.name()).second)
        throw ValidationError("duplicate task name '" + task.name() + "'");
    }
  }

  std::span<const Task> tasks() const noexcept { return tasks_; }
  const Task& operator[](std::size_t i) const { return tasks_.at(i); }
  std::size_t size() const noexcept { return tasks_.size(); }
  bool empty() const noexcept { return tasks_.empty(); }

  // Index of the task called `name`, or size() when absent.
  std::size_t find(std::string_view name) const {
    auto it = std::ranges::find(tasks_, name, &Task::name);
    return static_cast<std::size_t>(it - tasks_.begin());
  }

  Time max_deadline() const {
    Time d = 0;
    for (const auto& task : tasks_) d = std::max(d, task.max_deadline());
    return d;
  }

  friend bool operator==(const TaskSet&, const TaskSet&) = default;

 private:
  std::vector<Task> tasks_;
};

struct TaskCharacteristics {
  Slope u_max;     // max_k c_k / t_k
  Work c_max = 0;  // max_k c_k
  Work c_umax = 0; // max c_k among configurations whose slope is u_max

  friend bool operator==(const TaskCharacteristics&,
                         const TaskCharacteristics&) = default;
};

inline TaskCharacteristics characteristics(const Task& task) {
  TaskCharacteristics ch;
  for (const auto& cfg : task.configs()) {
    const Slope slope(cfg.c, cfg.t);
    if (slope > ch.u_max) {
      ch.u_max = slope;
      ch.c_umax = cfg.c;
    } else if (slope == ch.u_max) {
      ch.c_umax = std::max(ch.c_umax, cfg.c);
    }
    ch.c_max = std::max(ch.c_max, cfg.c);
  }
  return ch;
}

inline Slope total_max_utilization(const TaskSet& ts) {
  Slope sum;
  for (const auto& task : ts.tasks()) sum += characteristics(task).u_max;
  return sum;
}

}  // namespace ncgmf
