#include <gtest/gtest.h>

#include "ncgmf/bounds.hpp"

namespace ncgmf {
namespace {

const Task three_frame("tau", {{4, 5, 5}, {6, 10, 10}, {3, 4, 4}});
const Task two_frame("tau", {{1, 2, 2}, {2, 5, 5}});
const Task single("s", {{2, 4, 4}});

TEST(UpperBound, Values) {
  auto ub = upper_bound(characteristics(three_frame));
  EXPECT_EQ(ub.slope, Slope(4, 5));
  EXPECT_EQ(ub.intercept, Slope(6));
  EXPECT_EQ(ub.kind, BoundKind::upper);
  EXPECT_EQ(ub(5), Slope(10));

  ub = upper_bound(characteristics(single));
  EXPECT_EQ(ub.slope, Slope(1, 2));
  EXPECT_EQ(ub.intercept, Slope(2));

  ub = upper_bound(characteristics(two_frame));
  EXPECT_EQ(ub.slope, Slope(1, 2));
  EXPECT_EQ(ub.intercept, Slope(2));
}

TEST(LowerBoundSimple, Values) {
  auto lb = lower_bound_simple(characteristics(three_frame));
  EXPECT_EQ(lb.slope, Slope(4, 5));
  EXPECT_EQ(lb.intercept, Slope(0));
  lb = lower_bound_simple(characteristics(single));
  EXPECT_EQ(lb.slope, Slope(2, 4));
  EXPECT_EQ(lb.intercept, Slope(0));
  lb = lower_bound_simple(characteristics(two_frame));
  EXPECT_EQ(lb.slope, Slope(1, 2));
}

TEST(LowerBoundRefined, Values) {
  auto lb = lower_bound_refined(characteristics(three_frame));
  EXPECT_EQ(lb.slope, Slope(4, 5));
  EXPECT_EQ(lb.intercept, Slope(2));
  EXPECT_EQ(lb.kind, BoundKind::lower_refined);

  // c_max attained by the steepest configuration.
  const Task steep("x", {{6, 6, 6}, {1, 3, 3}});
  const auto ch = characteristics(steep);
  EXPECT_EQ(lower_bound_refined(ch).intercept, lower_bound_simple(ch).intercept);

  EXPECT_EQ(lower_bound_refined(characteristics(two_frame)).intercept, Slope(1));
}

TEST(PruneKeep, Predicate) {
  const auto ch = characteristics(two_frame);  // u_max = 1/2, c_max = 2
  EXPECT_TRUE(prune_keep({10, 4}, ch));
  EXPECT_FALSE(prune_keep({10, 3}, ch));  // 5 < 5 is false
  EXPECT_TRUE(prune_keep({0, 0}, ch));
  EXPECT_TRUE(prune_keep({0, 0}, characteristics(three_frame)));
  EXPECT_TRUE(prune_keep({0, 0}, characteristics(single)));
}

}  // namespace
}  // namespace ncgmf
