// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace loewner {

enum class Interp { constant, linear };

struct DriverKnot {
  double t = 0.0;
  double value = 0.0;
};

/// Stage samples of a driving function over one RK4 step [a, b].
struct StageValues {
  double at_start;
  double at_mid;
  double at_end;
};

/// A sampled driving function. Knot times are strictly increasing;
/// evaluation clamps to the first/last knot outside the covered range, so a
/// single knot defines a constant driver on all of [0, inf).
class PiecewiseCurve {
 public:
  PiecewiseCurve(std::vector<DriverKnot> knots, Interp interp);

  double value(double t) const;

  /// Stage samples for a step [a, b] that does not cross a knot (the
  /// integrators align steps on knots). Constant interpolation samples the
  /// midpoint so the right-continuous jump at b is not picked up early.
  StageValues stages(double a, double b) const;

  /// First knot time strictly greater than t, or +infinity.
  double next_breakpoint_after(double t) const;

  const std::vector<DriverKnot>& knots() const { return knots_; }
  Interp interp() const { return interp_; }

 private:
  std::vector<DriverKnot> knots_;
  Interp interp_;
};

}  // namespace loewner
