#pragma once

// Random desk-scale instances for randomized checks.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ncgmf/oracle.hpp"
#include "ncgmf/task_model.hpp"

namespace ncgmf {

struct RandomTaskLimits {
  std::size_t max_configs = 3;
  Work max_c = 5;
  Time max_t = 6;
  bool constrained_deadlines = false;  // draw d in [c, t] instead of [1, 2t]
};

inline Task random_task(std::mt19937_64& rng, const RandomTaskLimits& lim,
                        std::string name = "tau") {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const auto n = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(lim.max_configs)));
  std::vector<TaskConfig> configs;
  for (std::size_t k = 0; k < n; ++k) {
    TaskConfig cfg;
    cfg.t = pick(1, lim.max_t);
    if (lim.constrained_deadlines) {
      cfg.c = pick(1, std::min(lim.max_c, cfg.t));
      cfg.d = pick(cfg.c, cfg.t);
    } else {
      cfg.c = pick(1, lim.max_c);
      cfg.d = pick(1, 2 * cfg.t);
    }
    configs.push_back(cfg);
  }
  return Task(std::move(name), std::move(configs));
}

// Largest horizon <= wanted whose dense-prefix count stays within cap.
inline Time fit_horizon(const Task& task, Time wanted, std::size_t cap) {
  Time h = wanted;
  while (h > 0 && count_dense_prefixes(task, h) > cap) --h;
  return h;
}

}  // namespace ncgmf
