#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "ncgmf/random_tasks.hpp"
#include "ncgmf/task_io.hpp"
#include "ncgmf/task_model.hpp"

namespace ncgmf {
namespace {

Task make(std::vector<std::pair<Work, Time>> ct) {
  std::vector<TaskConfig> cfgs;
  for (auto [c, t] : ct) cfgs.push_back({c, t, t});
  return Task("tau", cfgs);
}

TEST(ParseTaskset, MinimalDocument) {
  const auto ts = parse_taskset(R"({"tasks":[{"name":"a","configs":[{"c":1,"d":3,"t":3}]}]})");
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].size(), 1u);
  EXPECT_EQ(ts[0].config(0), (TaskConfig{1, 3, 3}));
  EXPECT_EQ(ts[0].offset(), 0);
}

TEST(ParseTaskset, TwoConfigTaskKeepsOrder) {
  const auto ts = parse_taskset(R"({"tasks":[
    {"name":"tau","offset":4,"configs":[{"c":1,"d":2,"t":2},{"c":2,"d":5,"t":5}]},
    {"name":"low","configs":[{"c":1,"d":3,"t":3}]}]})");
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0].name(), "tau");
  EXPECT_EQ(ts[0].offset(), 4);
  EXPECT_EQ(ts[0].config(0).c, 1);
  EXPECT_EQ(ts[0].config(1).c, 2);
  EXPECT_EQ(ts[0].config(1).t, 5);
  EXPECT_EQ(ts.find("low"), 1u);
  EXPECT_EQ(ts.find("missing"), 2u);
}

TEST(ParseTaskset, ZeroSeparationIsRejected) {
  try {
    parse_taskset(R"({"tasks":[{"name":"a","configs":[{"c":1,"d":3,"t":0}]}]})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("t must be >= 1"), std::string::npos);
  }
}

TEST(ParseTaskset, ValidationErrors) {
  EXPECT_THROW(parse_taskset(R"({"tasks":[{"name":"a","configs":[]}]})"), ValidationError);
  EXPECT_THROW(parse_taskset(R"({"tasks":[{"name":"a","offset":-1,"configs":[{"c":1,"d":1,"t":1}]}]})"),
               ValidationError);
  EXPECT_THROW(parse_taskset(R"({"tasks":[{"name":"a","configs":[{"c":1,"d":1,"t":1}]},
                                          {"name":"a","configs":[{"c":1,"d":1,"t":1}]}]})"),
               ValidationError);
  EXPECT_THROW(parse_taskset(R"({"tasks":[{"name":"a","configs":[{"c":1.5,"d":1,"t":1}]}]})"),
               ValidationError);
  EXPECT_THROW(parse_taskset(R"({"tasks":[{"name":"a","configs":[{"c":1,"d":1}]}]})"),
               ValidationError);
  EXPECT_THROW(parse_taskset(R"({"tasks":[{"name":"a","prio":1,"configs":[{"c":1,"d":1,"t":1}]}]})"),
               ValidationError);
  EXPECT_THROW(parse_taskset(R"([1,2])"), ValidationError);
}

TEST(ParseTaskset, SyntaxErrorReportsPosition) {
  try {
    parse_taskset("{\"tasks\": [ }");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 13u);
  }
}

TEST(ParseTaskset, ConstrainedDeadlinesNotRequired) {
  // c > d and d > t are both legal input.
  const auto ts = parse_taskset(R"({"tasks":[{"name":"a","configs":[{"c":5,"d":3,"t":2}]}]})");
  EXPECT_EQ(ts[0].config(0).c, 5);
}

TEST(ParseTaskset, RoundTripsRandomSets) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 50; ++n) {
    std::vector<Task> tasks;
    const int m = 1 + n % 4;
    for (int j = 0; j < m; ++j) {
      auto t = random_task(rng, {}, "t" + std::to_string(j));
      tasks.emplace_back(t.name(), std::vector<TaskConfig>(t.configs().begin(), t.configs().end()),
                         static_cast<Time>(j * n % 5));
    }
    const TaskSet ts(std::move(tasks));
    EXPECT_EQ(parse_taskset(serialize_taskset(ts)), ts);
  }
}

TEST(Characteristics, ThreeFrameTask) {
  const auto ch = characteristics(make({{4, 5}, {6, 10}, {3, 4}}));
  EXPECT_EQ(ch.u_max, Slope(4, 5));
  EXPECT_EQ(ch.c_max, 6);
  EXPECT_EQ(ch.c_umax, 4);
}

TEST(Characteristics, SingleConfig) {
  const auto ch = characteristics(make({{2, 4}}));
  EXPECT_EQ(ch.u_max, Slope(1, 2));
  EXPECT_EQ(ch.c_max, 2);
  EXPECT_EQ(ch.c_umax, 2);
}

TEST(Characteristics, TiedSlopesTakeLargestWork) {
  const auto ch = characteristics(make({{2, 4}, {4, 8}}));
  // Enumerate configs by hand: both have slope 1/2.
  EXPECT_EQ(ch.u_max, Slope(1, 2));
  EXPECT_EQ(ch.c_umax, 4);
  EXPECT_EQ(characteristics(make({{4, 8}, {2, 4}})).c_umax, 4);
}

TEST(Characteristics, Properties) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 300; ++n) {
    const auto task = random_task(rng, {4, 9, 12});
    const auto ch = characteristics(task);
    EXPECT_LE(ch.c_umax, ch.c_max);
    bool attained = false;
    for (const auto& cfg : task.configs()) {
      EXPECT_LE(Slope(cfg.c), ch.u_max * cfg.t);
      attained = attained || Slope(cfg.c, cfg.t) == ch.u_max;
    }
    EXPECT_TRUE(attained);

    // Permutation invariance.
    std::vector<TaskConfig> cfgs(task.configs().begin(), task.configs().end());
    std::ranges::shuffle(cfgs, rng);
    EXPECT_EQ(characteristics(Task("p", cfgs)), ch);

    // Common scaling of c and t.
    const int s = 1 + n % 5;
    for (auto& cfg : cfgs) {
      cfg.c *= s;
      cfg.t *= s;
    }
    const auto scaled = characteristics(Task("s", cfgs));
    EXPECT_EQ(scaled.u_max, ch.u_max);
    EXPECT_EQ(scaled.c_max, s * ch.c_max);
    EXPECT_EQ(scaled.c_umax, s * ch.c_umax);
  }
}

}  // namespace
}  // namespace ncgmf
