#pragma once

// Brute-force ground truth for the MRBF: enumerate every dense scenario
// prefix up to a horizon and take the pointwise maximum of their request
// bound functions. Shares nothing with compute_mrbf beyond the rbf module.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncgmf/rbf.hpp"
#include "ncgmf/step_function.hpp"
#include "ncgmf/task_model.hpp"

namespace ncgmf {

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

// Enumeration would exceed its cap. Results are never silently truncated.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of dense prefixes whose separations first reach `horizon`,
// saturating at SIZE_MAX.
inline std::size_t count_dense_prefixes(const Task& task, Time horizon) {
  constexpr auto saturated = std::numeric_limits<std::size_t>::max();
  if (horizon <= 0) return 1;
  // leaves[h] = number of prefixes needed to cover h more time units.
  std::vector<std::size_t> leaves(static_cast<std::size_t>(horizon) + 1, 1);
  for (Time h = 1; h <= horizon; ++h) {
    std::size_t n = 0;
    for (const auto& cfg : task.configs()) {
      const auto rest = leaves[static_cast<std::size_t>(std::max<Time>(0, h - cfg.t))];
      n = (n > saturated - rest) ? saturated : n + rest;
    }
    leaves[static_cast<std::size_t>(h)] = n;
  }
  return leaves.back();
}

namespace detail {

template <class Visit>
void for_each_dense_prefix(const Task& task, Time horizon, std::size_t cap,
                           Visit&& visit) {
  if (count_dense_prefixes(task, horizon) > cap)
    throw CapExceeded("task '" + task.name() + "': more than " +
                      std::to_string(cap) + " dense prefixes up to " +
                      std::to_string(horizon));
  ScenarioPrefix prefix;
  auto rec = [&](auto& self, Time covered) -> void {
    if (covered >= horizon) {
      visit(std::as_const(prefix));
      return;
    }
    for (std::size_t k = 0; k < task.size(); ++k) {
      prefix.configs.push_back(k);
      self(self, covered + task.config(k).t);
      prefix.configs.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Every dense prefix whose cumulative separation first reaches >= horizon.
inline std::vector<ScenarioPrefix> enumerate_dense_prefixes(
    const Task& task, Time horizon, std::size_t cap = default_enumeration_cap) {
  std::vector<ScenarioPrefix> out;
  detail::for_each_dense_prefix(task, horizon, cap,
                                [&](const ScenarioPrefix& p) { out.push_back(p); });
  return out;
}

inline StepFunction brute_mrbf(const Task& task, Time horizon,
                               std::size_t cap = default_enumeration_cap) {
  // best[s] = highest demand any prefix shows right after time s.
  std::vector<Work> best(static_cast<std::size_t>(std::max<Time>(horizon, 0)), 0);
  detail::for_each_dense_prefix(task, horizon, cap, [&](const ScenarioPrefix& p) {
    const auto rbf = rbf_step_function(task, p, horizon);
    for (const auto& bp : rbf.breakpoints()) {
      auto& slot = best[static_cast<std::size_t>(bp.time)];
      slot = std::max(slot, bp.value);
    }
  });
  std::vector<Breakpoint> raises;
  for (std::size_t s = 0; s < best.size(); ++s)
    raises.push_back({static_cast<Time>(s), best[s]});
  return StepFunction::from_raises(std::move(raises));
}

struct Mismatch {
  Time t = 0;
  Work expected = 0;
  Work got = 0;
};

// First integer instant in [0, horizon] where the two functions differ.
// Breakpoints are integral, so integer sampling decides equality on the
// whole interval.
inline std::optional<Mismatch> first_mismatch(const StepFunction& expected,
                                              const StepFunction& got,
                                              Time horizon) {
  for (Time t = 0; t <= horizon; ++t) {
    if (expected(t) != got(t)) return Mismatch{t, expected(t), got(t)};
  }
  return std::nullopt;
}

}  // namespace ncgmf
