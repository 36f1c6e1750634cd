#pragma once

#include "ncgmf/task_model.hpp"

namespace ncgmf {

// A reachable (cumulative separation, cumulative demand) pair of some dense
// scenario.
struct FrontierPoint {
  Time t = 0;
  Work v = 0;

  friend bool operator==(const FrontierPoint&, const FrontierPoint&) = default;
};

enum class BoundKind { upper, lower_simple, lower_refined };

// slope * t + intercept, evaluated exactly.
struct LinearBound {
  Slope slope;
  Slope intercept;
  BoundKind kind = BoundKind::upper;

  Slope operator()(Time t) const { return slope * t + intercept; }
};

// No dense scenario ever rises above u_max * t + c_max.
inline LinearBound upper_bound(const TaskCharacteristics& ch) {
  return {ch.u_max, Slope(ch.c_max), BoundKind::upper};
}

// Repeating the steepest configuration keeps the MRBF above u_max * t.
inline LinearBound lower_bound_simple(const TaskCharacteristics& ch) {
  return {ch.u_max, Slope(0), BoundKind::lower_simple};
}

// u_max * t + (c_max - c_umax). Unproven; only checked empirically and never
// used for pruning.
inline LinearBound lower_bound_refined(const TaskCharacteristics& ch) {
  return {ch.u_max, Slope(ch.c_max - ch.c_umax), BoundKind::lower_refined};
}

// Keep iff t * u_max < v + c_max. A discarded point sits at or below
// lower_bound_simple - c_max and none of its continuations can reach the
// MRBF.
inline bool prune_keep(const FrontierPoint& p, const TaskCharacteristics& ch) {
  return ch.u_max * p.t < Slope(p.v + ch.c_max);
}

}  // namespace ncgmf
