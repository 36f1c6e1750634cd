#pragma once

// Command-line front end. Kept in a header so the tests can drive it with
// in-memory streams.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncgmf/ncgmf.hpp"

namespace ncgmf::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;  // not proven / check failed / miss seen
inline constexpr int exit_input = 2;     // unreadable or invalid input
inline constexpr int exit_cap = 3;       // enumeration cap exceeded
inline constexpr int exit_reverse = 4;   // MRBF test beat the exact test

struct RunConfig {
  std::string command;
  std::string input;
  std::optional<Time> horizon;
  bool pruning = true;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "text";
  std::size_t cap = default_enumeration_cap;
  std::string task;
};

namespace detail {

inline std::string pair_name(const TaskSet& ts, std::size_t i, std::size_t k) {
  return ts[i].name() + " " + std::to_string(k + 1);
}

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto ts = load_taskset(cfg.input);
  const auto report = analyze(ts, cfg.pruning ? Pruning::on : Pruning::off);
  if (cfg.format == "machine")
    out << report_to_json(ts, report).dump(2) << '\n';
  else
    write_text_report(out, ts, report);
  return report.overall == Verdict::schedulable_by_test ? exit_ok : exit_negative;
}

inline int cmd_mrbf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto ts = load_taskset(cfg.input);
  const auto j = ts.find(cfg.task);
  if (j == ts.size()) {
    err << "error: unknown task '" << cfg.task << "'\n";
    return exit_input;
  }
  Time horizon = interference_horizons(ts)[j];
  if (horizon == 0) horizon = ts.max_deadline();
  if (cfg.horizon) horizon = *cfg.horizon;
  const auto result =
      compute_mrbf(ts[j], horizon, cfg.pruning ? Pruning::on : Pruning::off);
  write_mrbf_csv(out, ts[j], result);
  err << "# points_expanded=" << result.points_expanded
      << " horizon=" << result.horizon
      << " pruning=" << (result.pruned ? "on" : "off") << '\n';
  return exit_ok;
}

struct OracleCase {
  Task task;
  Time horizon;
};

inline int cmd_oracle_check(const RunConfig& cfg, std::ostream& out) {
  std::vector<OracleCase> cases;
  if (!cfg.input.empty()) {
    const auto ts = load_taskset(cfg.input);
    const auto horizons = interference_horizons(ts);
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const Time h = cfg.horizon.value_or(std::max(horizons[j], ts[j].max_deadline()));
      cases.push_back({ts[j], h});
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t n = 0; n < cfg.trials; ++n) {
      auto task = random_task(rng, {}, "random" + std::to_string(n + 1));
      const Time wanted = cfg.horizon.value_or(
          std::uniform_int_distribution<Time>(0, 30)(rng));
      cases.push_back({task, fit_horizon(task, wanted, cfg.cap)});
    }
  }

  bool all_pass = true;
  auto results = nlohmann::json::array();
  for (const auto& c : cases) {
    const auto expected = brute_mrbf(c.task, c.horizon, cfg.cap);
    std::optional<Mismatch> bad;
    std::string mode;
    for (auto p : {Pruning::on, Pruning::off}) {
      const auto got = compute_mrbf(c.task, c.horizon, p).function;
      bad = first_mismatch(expected, got, c.horizon);
      if (bad) {
        mode = p == Pruning::on ? "pruned" : "unpruned";
        break;
      }
    }
    all_pass = all_pass && !bad;
    if (cfg.format == "machine") {
      nlohmann::json r{{"task", c.task.name()},
                       {"horizon", c.horizon},
                       {"pass", !bad}};
      if (bad)
        r["mismatch"] = {{"mode", mode}, {"t", bad->t},
                         {"expected", bad->expected}, {"got", bad->got}};
      results.push_back(r);
    } else if (bad) {
      out << "FAIL " << c.task.name() << " horizon=" << c.horizon << " ("
          << mode << ") t=" << bad->t << " expected=" << bad->expected
          << " got=" << bad->got << '\n';
    } else {
      out << "PASS " << c.task.name() << " horizon=" << c.horizon << '\n';
    }
  }
  if (cfg.format == "machine")
    out << nlohmann::json{{"results", results}, {"pass", all_pass}}.dump(2) << '\n';
  else
    out << (all_pass ? "oracle-check PASS" : "oracle-check FAIL") << '\n';
  return all_pass ? exit_ok : exit_negative;
}

inline int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const auto ts = load_taskset(cfg.input);
  const auto report = analyze(ts);
  bool problem = false;
  auto records = nlohmann::json::array();
  if (cfg.format != "machine")
    out << "task config max_observed bound status\n";
  std::size_t rb_index = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto search = worst_response_search(ts, i, cfg.trials, cfg.seed + i,
                                              cfg.horizon);
    problem = problem || search.deadline_misses > 0 ||
              search.dominance.violations > 0;
    for (std::size_t k = 0; k < ts[i].size(); ++k, ++rb_index) {
      const auto& rb = report.bounds[rb_index];
      const auto seen = search.max_response_per_config[k];
      std::string status = "ok";
      if (seen && rb.bound && *seen > *rb.bound) {
        status = "exceeds-bound";
        problem = true;
      }
      if (cfg.format == "machine") {
        records.push_back(
            {{"task", ts[i].name()}, {"config", k + 1},
             {"max_observed", seen ? nlohmann::json(*seen) : nlohmann::json()},
             {"bound", rb.bound ? nlohmann::json(*rb.bound)
                                : nlohmann::json("diverged")},
             {"status", status}});
      } else {
        out << pair_name(ts, i, k) << ' '
            << (seen ? std::to_string(*seen) : std::string("-")) << ' '
            << (rb.bound ? std::to_string(*rb.bound) : std::string("diverged"))
            << ' ' << status << '\n';
      }
    }
    if (cfg.format != "machine") {
      out << "# " << ts[i].name() << ": traces=" << search.traces
          << " deadline_misses=" << search.deadline_misses
          << " dominance_checked=" << search.dominance.checked
          << " dominance_violations=" << search.dominance.violations
          << " backlogged_skipped=" << search.dominance.skipped_backlogged
          << '\n';
    } else {
      records.push_back({{"task", ts[i].name()},
                         {"traces", search.traces},
                         {"deadline_misses", search.deadline_misses},
                         {"dominance_violations", search.dominance.violations}});
    }
  }
  if (cfg.format == "machine")
    out << nlohmann::json{{"records", records}, {"ok", !problem}}.dump(2) << '\n';
  else
    out << (problem ? "simulate FOUND-PROBLEMS" : "simulate OK") << '\n';
  return problem ? exit_negative : exit_ok;
}

inline int cmd_pessimism(const RunConfig& cfg, std::ostream& out) {
  const auto ts = load_taskset(cfg.input);
  const auto report = pessimism_gap(ts, cfg.horizon, cfg.cap);
  if (cfg.format == "machine") {
    auto entries = nlohmann::json::array();
    for (const auto& e : report.entries)
      entries.push_back({{"task", ts[e.task_index].name()},
                         {"config", e.config_index + 1},
                         {"exact", e.exact},
                         {"mrbf", to_string(e.mrbf)},
                         {"flagged", e.flagged},
                         {"reverse", e.reverse}});
    out << nlohmann::json{{"entries", entries},
                          {"flagged", report.flagged},
                          {"reverse", report.reverse}}
               .dump(2)
        << '\n';
  } else {
    out << "task config exact mrbf flag\n";
    for (const auto& e : report.entries) {
      out << pair_name(ts, e.task_index, e.config_index) << ' '
          << (e.exact ? "schedulable" : "unschedulable") << ' '
          << to_string(e.mrbf) << ' '
          << (e.flagged ? "PESSIMISTIC" : e.reverse ? "REVERSE" : "-") << '\n';
    }
    out << "flagged " << report.flagged << " reverse " << report.reverse << '\n';
  }
  return report.reverse > 0 ? exit_reverse : exit_ok;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Fixed-priority schedulability analysis of non-cyclic "
               "generalized multiframe task sets"};
  app.name("ncgmf");
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", cfg.input, "task-set JSON file");
    if (input_required) in->required();
    sub->add_option("--horizon", cfg.horizon, "analysis / simulation horizon")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "write the result to this file");
    sub->add_option("--format", cfg.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "MRBF fixed-point test");
  add_common(analyze_cmd, true);
  analyze_cmd->add_flag("--no-prune", [&](std::int64_t) { cfg.pruning = false; },
                        "disable frontier pruning");

  auto* mrbf_cmd = app.add_subcommand("mrbf", "dump one task's MRBF as CSV");
  add_common(mrbf_cmd, true);
  mrbf_cmd->add_option("--task", cfg.task, "task name")->required();
  mrbf_cmd->add_flag("--no-prune", [&](std::int64_t) { cfg.pruning = false; },
                     "disable frontier pruning");

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "compare the MRBF with brute-force enumeration");
  add_common(oracle_cmd, false);
  oracle_cmd->add_option("--trials", cfg.trials, "random tasks when no input")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--seed", cfg.seed, "random seed");
  oracle_cmd->add_option("--cap", cfg.cap, "enumeration cap")
      ->check(CLI::PositiveNumber);

  auto* sim_cmd = app.add_subcommand(
      "simulate", "randomized simulation against the response bounds");
  add_common(sim_cmd, true);
  sim_cmd->add_option("--trials", cfg.trials, "random traces per task")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", cfg.seed, "random seed");

  auto* pess_cmd = app.add_subcommand(
      "pessimism", "exact enumerated test versus the MRBF test");
  add_common(pess_cmd, true);
  pess_cmd->add_option("--cap", cfg.cap, "scenario combination cap")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return exit_input;
    }
    sink = &file;
  }

  try {
    if (cfg.command == "analyze") return detail::cmd_analyze(cfg, *sink);
    if (cfg.command == "mrbf") return detail::cmd_mrbf(cfg, *sink, err);
    if (cfg.command == "oracle-check") return detail::cmd_oracle_check(cfg, *sink);
    if (cfg.command == "simulate") return detail::cmd_simulate(cfg, *sink);
    if (cfg.command == "pessimism") return detail::cmd_pessimism(cfg, *sink);
  } catch (const ParseError& e) {
    err << "error: syntax error at byte " << e.position() << ": " << e.what() << '\n';
    return exit_input;
  } catch (const ValidationError& e) {
    err << "error: invalid task set: " << e.what() << '\n';
    return exit_input;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_cap;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

}  // namespace ncgmf::cli
