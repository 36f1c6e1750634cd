#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "ncgmf/bounds.hpp"
#include "ncgmf/mrbf.hpp"
#include "ncgmf/sched.hpp"
#include "ncgmf/task_model.hpp"

namespace ncgmf {

inline constexpr int report_format_version = 1;

// Integers print as integers; other rationals as decimals with up to six
// fractional digits.
inline std::string format_rational(const Slope& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  std::string s = std::to_string(boost::rational_cast<double>(q));
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

inline std::string format_exact(const Slope& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Text report, one record per (task, config), overall verdict last.
inline void write_text_report(std::ostream& os, const TaskSet& ts,
                              const AnalysisReport& report) {
  os << "# ncgmf analysis report v" << report_format_version << '\n';
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const auto& m = report.mrbfs[j];
    os << "# mrbf " << ts[j].name() << " horizon=" << m.horizon
       << " points_expanded=" << m.points_expanded << '\n';
  }
  for (const auto& w : report.warnings) os << "# warning: " << w << '\n';
  os << "task config C D bound verdict\n";
  for (const auto& rb : report.bounds) {
    const auto& cfg = ts[rb.task_index].config(rb.config_index);
    os << ts[rb.task_index].name() << ' ' << rb.config_index + 1 << ' '
       << cfg.c << ' ' << cfg.d << ' '
       << (rb.bound ? std::to_string(*rb.bound) : std::string("diverged")) << ' '
       << to_string(rb.verdict) << '\n';
  }
  os << "overall " << to_string(report.overall) << '\n';
}

inline nlohmann::json report_to_json(const TaskSet& ts,
                                     const AnalysisReport& report) {
  auto records = nlohmann::json::array();
  for (const auto& rb : report.bounds) {
    const auto& cfg = ts[rb.task_index].config(rb.config_index);
    records.push_back({{"task", ts[rb.task_index].name()},
                       {"config", rb.config_index + 1},
                       {"c", cfg.c},
                       {"d", cfg.d},
                       {"bound", rb.bound ? nlohmann::json(*rb.bound)
                                          : nlohmann::json("diverged")},
                       {"verdict", to_string(rb.verdict)}});
  }
  auto mrbfs = nlohmann::json::array();
  for (std::size_t j = 0; j < ts.size(); ++j)
    mrbfs.push_back({{"task", ts[j].name()},
                     {"horizon", report.mrbfs[j].horizon},
                     {"points_expanded", report.mrbfs[j].points_expanded}});
  return {{"version", report_format_version},
          {"records", records},
          {"mrbf", mrbfs},
          {"warnings", report.warnings},
          {"overall", to_string(report.overall)}};
}

// time,value,ub,lb rows: one per breakpoint (value = demand right after that
// instant) and a closing row at the horizon holding mrbf(horizon). lb is the
// refined lower line. Header only when horizon is 0.
inline void write_mrbf_csv(std::ostream& os, const Task& task,
                           const MrbfResult& result) {
  const auto ch = characteristics(task);
  const auto ub = upper_bound(ch);
  const auto lb = lower_bound_refined(ch);
  os << "time,value,ub,lb\n";
  auto row = [&](Time t, Work v) {
    os << t << ',' << v << ',' << format_rational(ub(t)) << ','
       << format_rational(lb(t)) << '\n';
  };
  for (const auto& p : result.function.breakpoints()) row(p.time, p.value);
  if (result.horizon > 0) row(result.horizon, result.function(result.horizon));
}

}  // namespace ncgmf
