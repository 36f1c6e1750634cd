#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgmf/bounds.hpp"
#include "ncgmf/step_function.hpp"
#include "ncgmf/task_model.hpp"

namespace ncgmf {

enum class Pruning { off, on };

// Queried past the horizon the function was computed for.
class HorizonExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct MrbfResult {
  StepFunction function;  // exact on [0, horizon]
  Time horizon = 0;
  bool pruned = true;
  std::size_t points_expanded = 0;  // points taken off the frontier queue
};

// Maximum request bound function of `task` on [0, horizon].
//
// Frontier points (t, v) are processed in increasing t starting from (0, 0).
// A point with t < horizon is expanded through every configuration k: the
// envelope is raised to v + c_k for all x > t and (t + t_k, v + c_k) joins
// the frontier. Points sharing the same t are merged keeping the largest v,
// which subsumes the duplicate check since a smaller v at equal t is
// dominated. With pruning, successors failing prune_keep are dropped.
inline MrbfResult compute_mrbf(const Task& task, Time horizon,
                               Pruning pruning = Pruning::on) {
  if (horizon < 0) throw std::invalid_argument("compute_mrbf: negative horizon");
  const auto ch = characteristics(task);

  MrbfResult result;
  result.horizon = horizon;
  result.pruned = pruning == Pruning::on;

  std::map<Time, Work> frontier{{0, 0}};
  std::vector<Breakpoint> raises;
  while (!frontier.empty()) {
    const FrontierPoint p{frontier.begin()->first, frontier.begin()->second};
    frontier.erase(frontier.begin());
    ++result.points_expanded;
    if (p.t >= horizon) continue;

    for (const auto& cfg : task.configs()) {
      const FrontierPoint next{p.t + cfg.t, p.v + cfg.c};
      raises.push_back({p.t, next.v});
      if (result.pruned && !prune_keep(next, ch)) continue;
      auto [it, inserted] = frontier.try_emplace(next.t, next.v);
      if (!inserted && it->second < next.v) it->second = next.v;
    }
  }
  result.function = StepFunction::from_raises(std::move(raises));
  return result;
}

inline Work mrbf_eval(const MrbfResult& result, Time t) {
  if (t < 0 || t > result.horizon)
    throw HorizonExceeded("mrbf queried at " + std::to_string(t) +
                          " beyond horizon " + std::to_string(result.horizon));
  return result.function(t);
}

}  // namespace ncgmf
