#include <random>

#include <gtest/gtest.h>

#include "ncgmf/bounds.hpp"
#include "ncgmf/mrbf.hpp"
#include "ncgmf/oracle.hpp"
#include "ncgmf/random_tasks.hpp"

namespace ncgmf {
namespace {

const Task two_frame("tau", {{1, 2, 2}, {2, 5, 5}});
const Task three_frame("tau", {{4, 5, 5}, {6, 10, 10}, {3, 4, 4}});

TEST(ComputeMrbf, TwoFrameEnvelope) {
  const auto r = compute_mrbf(two_frame, 4);
  // Brute force over dense prefixes: 2 on (0,2], 3 on (2,4].
  EXPECT_EQ(r.function, StepFunction({{0, 2}, {2, 3}}));
  EXPECT_EQ(r.horizon, 4);
  EXPECT_TRUE(r.pruned);
}

TEST(ComputeMrbf, ZeroHorizon) {
  for (auto p : {Pruning::on, Pruning::off}) {
    const auto r = compute_mrbf(three_frame, 0, p);
    EXPECT_TRUE(r.function.empty());
    EXPECT_EQ(r.points_expanded, 1u);
  }
}

TEST(ComputeMrbf, SingleFrameMatchesCeiling) {
  const Task single("s", {{2, 4, 4}});
  const auto r = compute_mrbf(single, 9);
  EXPECT_EQ(r.function, StepFunction({{0, 2}, {4, 4}, {8, 6}}));
  const auto via_rbf = rbf_step_function(single, {{0, 0, 0}}, 9);
  EXPECT_EQ(r.function, via_rbf);
}

TEST(ComputeMrbf, ThreeFrameMatchesFrozenEnumeration) {
  // Values at t = 0..40 from a standalone brute-force script.
  const std::vector<Work> expected{
      0,  6,  6,  6,  6,  9,  10, 10, 10, 12, 13, 14, 14, 15,
      16, 17, 18, 18, 19, 20, 21, 22, 22, 23, 24, 25, 26, 26,
      27, 28, 29, 30, 30, 31, 32, 33, 34, 34, 35, 36, 37};
  for (auto p : {Pruning::on, Pruning::off}) {
    const auto r = compute_mrbf(three_frame, 40, p);
    for (Time t = 0; t <= 40; ++t) EXPECT_EQ(mrbf_eval(r, t), expected[t]) << t;
  }
}

TEST(MrbfEval, Values) {
  const auto r = compute_mrbf(two_frame, 4);
  EXPECT_EQ(mrbf_eval(r, 3), 3);
  EXPECT_EQ(mrbf_eval(r, 0), 0);
  EXPECT_THROW(mrbf_eval(r, 5), HorizonExceeded);
  EXPECT_THROW(mrbf_eval(r, -1), HorizonExceeded);
}

TEST(MrbfProperties, OracleEquivalenceAndPruningNeutrality) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 150; ++n) {
    const auto task = random_task(rng, {3, 5, 6});
    const Time h = fit_horizon(task, static_cast<Time>(rng() % 31), 50'000);
    const auto expected = brute_mrbf(task, h);
    const auto on = compute_mrbf(task, h, Pruning::on);
    const auto off = compute_mrbf(task, h, Pruning::off);
    ASSERT_FALSE(first_mismatch(expected, on.function, h));
    ASSERT_EQ(on.function, off.function);
    EXPECT_LE(on.points_expanded, off.points_expanded);
  }
}

TEST(MrbfProperties, DominatesEveryDenseScenario) {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 60; ++n) {
    const auto task = random_task(rng, {3, 5, 6});
    const Time h = fit_horizon(task, 16, 20'000);
    const auto r = compute_mrbf(task, h);
    for (const auto& p : enumerate_dense_prefixes(task, h)) {
      for (Time t = 0; t <= h; ++t) ASSERT_GE(mrbf_eval(r, t), rbf_eval(task, p, t));
    }
  }
}

TEST(MrbfProperties, MonotoneInHorizon) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 100; ++n) {
    const auto task = random_task(rng, {4, 8, 10});
    const Time h1 = static_cast<Time>(rng() % 50);
    const Time h2 = h1 + static_cast<Time>(rng() % 50);
    const auto small = compute_mrbf(task, h1);
    const auto large = compute_mrbf(task, h2);
    EXPECT_EQ(small.function, large.function.truncated(h1));
  }
}

TEST(MrbfProperties, Sandwich) {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 200; ++n) {
    const auto task = random_task(rng, {4, 8, 10});
    const auto ch = characteristics(task);
    const auto ub = upper_bound(ch);
    const auto lb = lower_bound_simple(ch);
    const auto r = compute_mrbf(task, 60);
    for (Time t = 0; t <= 60; ++t) {
      ASSERT_LE(lb(t), Slope(mrbf_eval(r, t)));
      ASSERT_LE(Slope(mrbf_eval(r, t)), ub(t));
    }
    // Right limits at the jumps.
    for (const auto& p : r.function.breakpoints()) ASSERT_LE(Slope(p.value), ub(p.time));
  }
}

TEST(MrbfProperties, PruningDropsPointsOnLowSlopeTimes) {
  // t = 7 is only reachable through the flat configuration.
  const Task task("x", {{5, 5, 5}, {1, 7, 7}});
  const auto on = compute_mrbf(task, 30, Pruning::on);
  const auto off = compute_mrbf(task, 30, Pruning::off);
  EXPECT_EQ(on.function, off.function);
  EXPECT_LT(on.points_expanded, off.points_expanded);
}

}  // namespace
}  // namespace ncgmf
