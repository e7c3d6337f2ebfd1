// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace loewner {

PiecewiseCurve::PiecewiseCurve(std::vector<DriverKnot> knots, Interp interp)
    : knots_(std::move(knots)), interp_(interp) {
  if (knots_.empty()) {
    throw std::invalid_argument("PiecewiseCurve: at least one knot required");
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i].t) || !std::isfinite(knots_[i].value)) {
      throw std::invalid_argument("PiecewiseCurve: non-finite knot");
    }
    if (i > 0 && !(knots_[i].t > knots_[i - 1].t)) {
      throw std::invalid_argument(
          "PiecewiseCurve: knot times must be strictly increasing");
    }
  }
}

double PiecewiseCurve::value(double t) const {
  if (t <= knots_.front().t) return knots_.front().value;
  if (t >= knots_.back().t) return knots_.back().value;
  // First knot with time > t; the segment owner is the one before it.
  const auto it = std::upper_bound(
      knots_.begin(), knots_.end(), t,
      [](double lhs, const DriverKnot& k) { return lhs < k.t; });
  const DriverKnot& hi = *it;
  const DriverKnot& lo = *(it - 1);
  if (interp_ == Interp::constant) return lo.value;
  const double w = (t - lo.t) / (hi.t - lo.t);
  return lo.value + w * (hi.value - lo.value);
}

StageValues PiecewiseCurve::stages(double a, double b) const {
  const double mid = 0.5 * (a + b);
  if (interp_ == Interp::constant) {
    const double v = value(mid);
    return {v, v, v};
  }
  return {value(a), value(mid), value(b)};
}

double PiecewiseCurve::next_breakpoint_after(double t) const {
  const auto it = std::upper_bound(
      knots_.begin(), knots_.end(), t,
      [](double lhs, const DriverKnot& k) { return lhs < k.t; });
  if (it == knots_.end()) return std::numeric_limits<double>::infinity();
  return it->t;
}

}  // namespace loewner
