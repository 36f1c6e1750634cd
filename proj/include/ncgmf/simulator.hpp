#pragma once

// Unit-step preemptive fixed-priority simulation of concrete release traces,
// plus randomized searches that check the synchronous dense release pattern
// really is the worst case.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncgmf/rbf.hpp"
#include "ncgmf/task_model.hpp"

namespace ncgmf {

struct Release {
  std::size_t config = 0;
  Time gap = 0;  // distance to the next release of the same task

  friend bool operator==(const Release&, const Release&) = default;
};

// Releases of one task. An empty job list means the task stays silent.
struct TaskTrace {
  Time first_release = 0;
  std::vector<Release> jobs;

  friend bool operator==(const TaskTrace&, const TaskTrace&) = default;
};

struct ReleaseTrace {
  std::vector<TaskTrace> tasks;  // one per task of the set, priority order

  friend bool operator==(const ReleaseTrace&, const ReleaseTrace&) = default;
};

class TraceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JobRecord {
  std::size_t task = 0;
  std::size_t job = 0;  // 0-based index within the task
  std::size_t config = 0;
  Time release = 0;
  Time deadline = 0;  // absolute
  std::optional<Time> completion;  // nullopt: unfinished at the horizon

  std::optional<Time> response() const {
    if (!completion) return std::nullopt;
    return *completion - release;
  }
  bool missed(Time horizon) const {
    return completion ? *completion > deadline : deadline <= horizon;
  }

  friend bool operator==(const JobRecord&, const JobRecord&) = default;
};

struct SimResult {
  Time horizon = 0;
  std::vector<JobRecord> jobs;            // ordered by (task, job)
  std::vector<Time> idle_instants;        // in [0, horizon]
  std::vector<std::optional<std::size_t>> schedule;  // task run in [t, t+1)

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

inline void validate_trace(const TaskSet& ts, const ReleaseTrace& trace,
                           Time horizon) {
  if (trace.tasks.size() != ts.size())
    throw TraceError("trace has " + std::to_string(trace.tasks.size()) +
                     " tasks, task set has " + std::to_string(ts.size()));
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const auto& task = ts[j];
    const auto& tt = trace.tasks[j];
    if (tt.jobs.empty()) continue;
    if (tt.first_release < task.offset())
      throw TraceError("task '" + task.name() + "': first release " +
                       std::to_string(tt.first_release) + " before offset " +
                       std::to_string(task.offset()));
    Time next = tt.first_release;
    for (const auto& r : tt.jobs) {
      if (r.config >= task.size())
        throw TraceError("task '" + task.name() + "': bad config index");
      if (r.gap < task.config(r.config).t)
        throw TraceError("task '" + task.name() + "': gap " +
                         std::to_string(r.gap) + " below separation " +
                         std::to_string(task.config(r.config).t));
      next += r.gap;
    }
    if (next < horizon)
      throw TraceError("trace of task '" + task.name() + "' ends at " +
                       std::to_string(next) + " before horizon " +
                       std::to_string(horizon));
  }
}

// Simulates [0, horizon). At every integer instant the oldest pending job of
// the highest priority task with pending work runs for one unit.
inline SimResult simulate(const TaskSet& ts, const ReleaseTrace& trace,
                          Time horizon) {
  validate_trace(ts, trace, horizon);
  SimResult sim;
  sim.horizon = horizon;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    Time at = trace.tasks[j].first_release;
    std::size_t n = 0;
    for (const auto& r : trace.tasks[j].jobs) {
      if (at >= horizon) break;
      sim.jobs.push_back({j, n++, r.config, at, at + ts[j].config(r.config).d,
                          std::nullopt});
      at += r.gap;
    }
  }

  std::vector<std::size_t> next_release(ts.size());
  std::vector<std::size_t> first_job(ts.size());
  for (std::size_t idx = sim.jobs.size(); idx-- > 0;)
    first_job[sim.jobs[idx].task] = idx;
  std::vector<std::size_t> job_count(ts.size(), 0);
  for (const auto& job : sim.jobs) ++job_count[job.task];

  std::vector<std::deque<std::size_t>> pending(ts.size());
  std::vector<Work> remaining(sim.jobs.size());
  std::size_t outstanding = 0;
  sim.schedule.assign(static_cast<std::size_t>(horizon), std::nullopt);

  for (Time t = 0;; ++t) {
    if (outstanding == 0) sim.idle_instants.push_back(t);
    if (t == horizon) break;

    for (std::size_t j = 0; j < ts.size(); ++j) {
      while (next_release[j] < job_count[j]) {
        const auto idx = first_job[j] + next_release[j];
        if (sim.jobs[idx].release != t) break;
        remaining[idx] = ts[j].config(sim.jobs[idx].config).c;
        pending[j].push_back(idx);
        ++outstanding;
        ++next_release[j];
      }
    }

    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (pending[j].empty()) continue;
      const auto idx = pending[j].front();
      sim.schedule[static_cast<std::size_t>(t)] = j;
      if (--remaining[idx] == 0) {
        sim.jobs[idx].completion = t + 1;
        pending[j].pop_front();
        --outstanding;
      }
      break;
    }
  }
  return sim;
}

// All tasks up to and including i release their first job together, then
// every job follows the previous one after exactly its minimum separation.
// Lower priority tasks stay silent. The common start is the largest offset
// among the participating tasks (0 when no offsets are set).
inline ReleaseTrace synchronous_dense_trace(const TaskSet& ts, std::size_t i,
                                            std::span<const ScenarioPrefix> scenarios) {
  if (scenarios.size() <= i)
    throw std::invalid_argument("synchronous_dense_trace: missing scenarios");
  Time start = 0;
  for (std::size_t j = 0; j <= i; ++j) start = std::max(start, ts[j].offset());

  ReleaseTrace trace;
  trace.tasks.resize(ts.size());
  for (std::size_t j = 0; j <= i; ++j) {
    check_prefix(ts[j], scenarios[j]);
    trace.tasks[j].first_release = start;
    for (auto k : scenarios[j].configs)
      trace.tasks[j].jobs.push_back({k, ts[j].config(k).t});
  }
  return trace;
}

inline ReleaseTrace shifted(ReleaseTrace trace, Time delta) {
  for (auto& tt : trace.tasks) tt.first_release += delta;
  return trace;
}

// CSV event log: time,event,task,job,config. Task and config are printed
// 1-based; idle rows leave them empty.
inline void write_events_csv(std::ostream& os, const TaskSet& ts,
                             const SimResult& sim) {
  struct Row {
    Time time;
    int order;
    std::string text;
  };
  std::vector<Row> rows;
  for (const auto& job : sim.jobs) {
    const auto who = ts[job.task].name() + ',' + std::to_string(job.job + 1) +
                     ',' + std::to_string(job.config + 1);
    rows.push_back({job.release, 1, "release," + who});
    if (job.completion) rows.push_back({*job.completion, 0, "complete," + who});
  }
  for (auto t : sim.idle_instants) rows.push_back({t, 2, "idle,,,"});
  std::ranges::stable_sort(rows, [](const Row& a, const Row& b) {
    return a.time != b.time ? a.time < b.time : a.order < b.order;
  });
  os << "time,event,task,job,config\n";
  for (const auto& r : rows) os << r.time << ',' << r.text << '\n';
}

inline void write_trace_csv(std::ostream& os, const TaskSet& ts,
                            const ReleaseTrace& trace, Time horizon) {
  os << "time,event,task,job,config\n";
  struct Row {
    Time time;
    std::size_t task;
    std::size_t job;
    std::size_t config;
  };
  std::vector<Row> rows;
  for (std::size_t j = 0; j < trace.tasks.size(); ++j) {
    Time at = trace.tasks[j].first_release;
    std::size_t n = 0;
    for (const auto& r : trace.tasks[j].jobs) {
      if (at >= horizon) break;
      rows.push_back({at, j, n++, r.config});
      at += r.gap;
    }
  }
  std::ranges::stable_sort(rows, {}, &Row::time);
  for (const auto& r : rows)
    os << r.time << ",release," << ts[r.task].name() << ',' << r.job + 1 << ','
       << r.config + 1 << '\n';
}

// ---------------------------------------------------------------------------
// Critical-instant check.

struct DominanceViolation {
  JobRecord job;
  Time observed = 0;
  Time synchronous = 0;
  std::vector<ScenarioPrefix> scenarios;
};

struct DominanceCheck {
  std::size_t checked = 0;
  std::size_t skipped_backlogged = 0;  // an earlier job of the task was pending
  std::size_t skipped_uncovered = 0;   // trace too short to rebuild scenarios
  std::size_t violations = 0;
  std::optional<DominanceViolation> first_violation;
  std::optional<Time> max_synchronous;  // over the rebuilt synchronous runs

  void merge(const DominanceCheck& other) {
    checked += other.checked;
    skipped_backlogged += other.skipped_backlogged;
    skipped_uncovered += other.skipped_uncovered;
    violations += other.violations;
    if (!first_violation) first_violation = other.first_violation;
    if (other.max_synchronous)
      max_synchronous = std::max(max_synchronous.value_or(0), *other.max_synchronous);
  }
};

// For every finished job J of task i that found no earlier job of its own
// task pending, rebuilds the scenarios the higher priority tasks follow from
// J's release on (starting at their oldest job unfinished at that instant),
// replays them synchronously and densely with J, and checks that J's
// observed response is not larger.
inline DominanceCheck check_synchronous_dominance(const TaskSet& ts,
                                                  std::size_t i,
                                                  const ReleaseTrace& trace,
                                                  const SimResult& sim) {
  DominanceCheck out;
  std::vector<std::vector<const JobRecord*>> by_task(ts.size());
  for (const auto& job : sim.jobs) by_task[job.task].push_back(&job);

  for (const auto* job : by_task[i]) {
    const auto observed = job->response();
    if (!observed) continue;
    const Time r = job->release;
    bool backlogged = false;
    for (const auto* prev : by_task[i]) {
      if (prev->job >= job->job) break;
      if (!prev->completion || *prev->completion > r) backlogged = true;
    }
    if (backlogged) {
      ++out.skipped_backlogged;
      continue;
    }

    std::vector<ScenarioPrefix> scenarios(i + 1);
    bool covered = true;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& jobs = trace.tasks[j].jobs;
      std::size_t from = 0;
      while (from < by_task[j].size()) {
        const auto* hp = by_task[j][from];
        if (hp->release >= r || !hp->completion || *hp->completion > r) break;
        ++from;
      }
      Time span = 0;
      for (std::size_t n = from; n < jobs.size(); ++n) {
        scenarios[j].configs.push_back(jobs[n].config);
        span += ts[j].config(jobs[n].config).t;
      }
      if (span < *observed) covered = false;
    }
    if (!covered) {
      ++out.skipped_uncovered;
      continue;
    }
    // Later jobs of task i cannot delay J (FIFO), so pad with J's config.
    const auto& own = ts[i].config(job->config);
    for (Time span = 0; span < *observed; span += own.t)
      scenarios[i].configs.push_back(job->config);
    if (scenarios[i].configs.empty()) scenarios[i].configs.push_back(job->config);

    const auto sync = synchronous_dense_trace(ts, i, scenarios);
    const Time start = sync.tasks[i].first_release;
    const auto replay = simulate(ts, sync, start + *observed);
    const auto& first = *std::ranges::find_if(
        replay.jobs, [&](const JobRecord& jr) { return jr.task == i; });
    ++out.checked;
    // Unfinished by start + observed means the synchronous response is larger.
    const Time sync_response = first.completion ? *first.completion - start
                                                : *observed + 1;
    if (first.completion)
      out.max_synchronous = std::max(out.max_synchronous.value_or(0), sync_response);
    if (sync_response < *observed) {
      ++out.violations;
      if (!out.first_violation)
        out.first_violation = DominanceViolation{*job, *observed, sync_response,
                                                 scenarios};
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Randomized worst-response search.

struct SearchResult {
  Time horizon = 0;
  std::size_t traces = 0;
  std::optional<Time> max_response;            // any job of task i
  std::optional<Time> max_first_job_response;  // first job of task i
  std::vector<std::optional<Time>> max_response_per_config;
  ReleaseTrace witness;
  bool witness_synchronous = false;
  std::size_t deadline_misses = 0;
  DominanceCheck dominance;
};

// Horizon long enough for a few busy periods after the latest random offset.
inline Time default_search_horizon(const TaskSet& ts) {
  Time max_offset = 0;
  Time max_t = 0;
  for (const auto& task : ts.tasks()) {
    max_offset = std::max(max_offset, task.offset());
    max_t = std::max(max_t, task.max_separation());
  }
  return max_offset + 2 * ts.max_deadline() + 4 * max_t;
}

namespace detail {

inline Time uniform(std::mt19937_64& rng, Time lo, Time hi) {
  return std::uniform_int_distribution<Time>(lo, hi)(rng);
}

// Random configurations and slack; keeps going past the horizon until the
// jobs released at or after it span at least `horizon` densely, so that
// scenarios rebuilt from any job released before the horizon stay long
// enough.
inline TaskTrace random_task_trace(const Task& task, Time first, Time horizon,
                                   bool dense, std::mt19937_64& rng) {
  TaskTrace tt{first, {}};
  Time at = first;
  Time tail = 0;
  while (at < horizon || tail < horizon) {
    const auto k = static_cast<std::size_t>(
        uniform(rng, 0, static_cast<Time>(task.size()) - 1));
    const Time sep = task.config(k).t;
    const Time gap = dense ? sep : sep + uniform(rng, 0, 2 * sep);
    if (at >= horizon) tail += sep;
    tt.jobs.push_back({k, gap});
    at += gap;
  }
  return tt;
}

}  // namespace detail

// Runs `trials` random traces (random scenarios, offsets in
// [O_j, O_j + max D], slack in [0, 2 T] per gap) and as many synchronous
// dense traces with random scenarios, tracking task i's responses.
inline SearchResult worst_response_search(const TaskSet& ts, std::size_t i,
                                          std::size_t trials,
                                          std::uint64_t seed,
                                          std::optional<Time> horizon = std::nullopt) {
  if (trials < 1) throw std::invalid_argument("worst_response_search: trials < 1");
  SearchResult res;
  res.horizon = horizon.value_or(default_search_horizon(ts));
  res.max_response_per_config.assign(ts[i].size(), std::nullopt);
  std::mt19937_64 rng(seed);
  const Time max_d = ts.max_deadline();

  auto record = [&](const ReleaseTrace& trace, const SimResult& sim,
                    bool synchronous) {
    ++res.traces;
    bool first = true;
    for (const auto& job : sim.jobs) {
      if (job.task != i) continue;
      if (job.missed(sim.horizon)) ++res.deadline_misses;
      const auto resp = job.response();
      if (resp) {
        auto& per = res.max_response_per_config[job.config];
        per = std::max(per.value_or(0), *resp);
        if (first)
          res.max_first_job_response =
              std::max(res.max_first_job_response.value_or(0), *resp);
        if (!res.max_response || *resp > *res.max_response) {
          res.max_response = *resp;
          res.witness = trace;
          res.witness_synchronous = synchronous;
        }
      }
      first = false;
    }
  };

  for (std::size_t n = 0; n < trials; ++n) {
    ReleaseTrace random;
    random.tasks.resize(ts.size());
    for (std::size_t j = 0; j <= i; ++j) {
      const Time first = ts[j].offset() + detail::uniform(rng, 0, max_d);
      random.tasks[j] = detail::random_task_trace(ts[j], first, res.horizon,
                                                  false, rng);
    }
    const auto sim = simulate(ts, random, res.horizon);
    record(random, sim, false);
    res.dominance.merge(check_synchronous_dominance(ts, i, random, sim));

    std::vector<ScenarioPrefix> scenarios(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      for (const auto& r :
           detail::random_task_trace(ts[j], 0, res.horizon, true, rng).jobs)
        scenarios[j].configs.push_back(r.config);
    }
    const auto sync = synchronous_dense_trace(ts, i, scenarios);
    record(sync, simulate(ts, sync, res.horizon), true);
  }
  if (res.dominance.max_synchronous)
    res.max_first_job_response = std::max(res.max_first_job_response.value_or(0),
                                          *res.dominance.max_synchronous);
  return res;
}

}  // namespace ncgmf
