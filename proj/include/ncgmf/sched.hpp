#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgmf/mrbf.hpp"
#include "ncgmf/oracle.hpp"
#include "ncgmf/rbf.hpp"
#include "ncgmf/task_model.hpp"

namespace ncgmf {

enum class Verdict { schedulable_by_test, not_proven };

inline const char* to_string(Verdict v) {
  return v == Verdict::schedulable_by_test ? "schedulable-by-test"
                                           : "not-proven";
}

// Least t >= c with t == c + interference(t), found by iterating from c.
// Returns nullopt as soon as an iterate exceeds `limit`. `interference` must
// be non-decreasing and non-negative.
template <class Interference>
std::optional<Time> least_fixed_point(Work c, Time limit,
                                      Interference&& interference) {
  Time t = c;
  while (t <= limit) {
    const Time next = c + interference(t);
    if (next == t) return t;
    t = next;
  }
  return std::nullopt;
}

struct ResponseBound {
  std::size_t task_index = 0;
  std::size_t config_index = 0;
  std::optional<Time> bound;  // nullopt: iteration passed the deadline
  Time deadline = 0;
  Verdict verdict = Verdict::not_proven;
};

struct AnalysisReport {
  std::vector<ResponseBound> bounds;  // task-major, then config order
  Verdict overall = Verdict::schedulable_by_test;
  std::vector<MrbfResult> mrbfs;      // one per task, same order as the set
  std::vector<std::string> warnings;
};

// Horizon each task's MRBF must cover: the largest deadline of any lower
// priority task (0 for the lowest).
inline std::vector<Time> interference_horizons(const TaskSet& ts) {
  std::vector<Time> horizons(ts.size(), 0);
  Time below = 0;
  for (std::size_t j = ts.size(); j-- > 0;) {
    horizons[j] = below;
    below = std::max(below, ts[j].max_deadline());
  }
  return horizons;
}

// Response bound for configuration k of task i against the MRBFs of all
// higher priority tasks. mrbfs[j] for j < i must cover D_i^k.
inline ResponseBound response_bound(const TaskSet& ts, std::size_t i,
                                    std::size_t k,
                                    std::span<const MrbfResult> mrbfs) {
  const auto& cfg = ts[i].config(k);
  if (mrbfs.size() < i)
    throw std::invalid_argument("response_bound: missing higher-priority MRBFs");
  for (std::size_t j = 0; j < i; ++j) {
    if (mrbfs[j].horizon < cfg.d)
      throw HorizonExceeded("mrbf of '" + ts[j].name() + "' covers " +
                            std::to_string(mrbfs[j].horizon) + " < deadline " +
                            std::to_string(cfg.d) + " of '" + ts[i].name() + "'");
  }
  ResponseBound rb{i, k, std::nullopt, cfg.d, Verdict::not_proven};
  rb.bound = least_fixed_point(cfg.c, cfg.d, [&](Time t) {
    Work sum = 0;
    for (std::size_t j = 0; j < i; ++j) sum += mrbf_eval(mrbfs[j], t);
    return sum;
  });
  if (rb.bound) rb.verdict = Verdict::schedulable_by_test;
  return rb;
}

inline AnalysisReport analyze(const TaskSet& ts, Pruning pruning = Pruning::on) {
  AnalysisReport report;
  const auto horizons = interference_horizons(ts);
  for (std::size_t j = 0; j < ts.size(); ++j)
    report.mrbfs.push_back(compute_mrbf(ts[j], horizons[j], pruning));

  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t k = 0; k < ts[i].size(); ++k) {
      auto rb = response_bound(ts, i, k, report.mrbfs);
      if (rb.verdict != Verdict::schedulable_by_test)
        report.overall = Verdict::not_proven;
      // Later jobs of the same task are only covered when each job finishes
      // before the next one may arrive.
      if (rb.bound && *rb.bound > ts[i].config(k).t) {
        report.warnings.push_back(
            "task '" + ts[i].name() + "' config " + std::to_string(k + 1) +
            ": bound " + std::to_string(*rb.bound) +
            " exceeds its separation; backlog from the previous job of the "
            "same task is not covered");
      }
      report.bounds.push_back(rb);
    }
  }
  if (total_max_utilization(ts) > Slope(1))
    report.warnings.push_back("sum of maximal utilizations exceeds 1");
  return report;
}

// Fixed point for configuration k of task i when every higher priority task
// j follows the dense scenario hp[j]. nullopt if it exceeds D_i^k.
inline std::optional<Time> scenario_response(const TaskSet& ts, std::size_t i,
                                             std::size_t k,
                                             std::span<const ScenarioPrefix> hp) {
  if (hp.size() < i)
    throw std::invalid_argument("scenario_response: missing scenarios");
  const auto& cfg = ts[i].config(k);
  return least_fixed_point(cfg.c, cfg.d, [&](Time t) {
    Work sum = 0;
    for (std::size_t j = 0; j < i; ++j) sum += rbf_eval(ts[j], hp[j], t);
    return sum;
  });
}

// Exact check of configuration k of task i over every combination of dense
// scenarios of the higher priority tasks, each enumerated up to `horizon`.
// Only practical at desk scale; throws CapExceeded past `cap` combinations.
inline bool exact_test_enumerated(const TaskSet& ts, std::size_t i,
                                  std::size_t k, Time horizon,
                                  std::size_t cap = default_enumeration_cap) {
  const auto& cfg = ts[i].config(k);
  if (horizon < cfg.d)
    throw std::invalid_argument("exact_test_enumerated: horizon below deadline");

  std::size_t combinations = 1;
  for (std::size_t j = 0; j < i; ++j) {
    const auto n = count_dense_prefixes(ts[j], horizon);
    if (n > cap || combinations > cap / n)
      throw CapExceeded("exact test for '" + ts[i].name() + "' config " +
                        std::to_string(k + 1) + " needs more than " +
                        std::to_string(cap) + " scenario combinations");
    combinations *= n;
  }

  std::vector<std::vector<ScenarioPrefix>> choices;
  for (std::size_t j = 0; j < i; ++j)
    choices.push_back(enumerate_dense_prefixes(ts[j], horizon, cap));

  std::vector<std::size_t> pick(i, 0);
  std::vector<ScenarioPrefix> hp(i);
  while (true) {
    for (std::size_t j = 0; j < i; ++j) hp[j] = choices[j][pick[j]];
    if (!scenario_response(ts, i, k, hp)) return false;
    std::size_t j = 0;
    while (j < i && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == i) return true;
  }
}

struct PessimismEntry {
  std::size_t task_index = 0;
  std::size_t config_index = 0;
  bool exact = false;
  Verdict mrbf = Verdict::not_proven;
  bool flagged = false;  // exact schedulable, MRBF test inconclusive
  bool reverse = false;  // MRBF test schedulable, exact not: never expected
};

struct PessimismReport {
  std::vector<PessimismEntry> entries;
  std::size_t flagged = 0;
  std::size_t reverse = 0;
};

// Compares the exact enumerated test with the MRBF test for every (i, k).
// The exact test for (i, k) runs up to max(horizon, D_i^k).
inline PessimismReport pessimism_gap(const TaskSet& ts,
                                     std::optional<Time> horizon = std::nullopt,
                                     std::size_t cap = default_enumeration_cap) {
  const auto analysis = analyze(ts);
  PessimismReport report;
  for (const auto& rb : analysis.bounds) {
    const auto d = ts[rb.task_index].config(rb.config_index).d;
    PessimismEntry e{rb.task_index, rb.config_index};
    e.exact = exact_test_enumerated(ts, rb.task_index, rb.config_index,
                                    std::max(horizon.value_or(d), d), cap);
    e.mrbf = rb.verdict;
    const bool mrbf_ok = e.mrbf == Verdict::schedulable_by_test;
    e.flagged = e.exact && !mrbf_ok;
    e.reverse = !e.exact && mrbf_ok;
    report.flagged += e.flagged;
    report.reverse += e.reverse;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace ncgmf
