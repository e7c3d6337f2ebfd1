// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "loewner/driver.hpp"

namespace loewner {

/// Point of the open upper half-plane.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double x, double y);
  double x() const { return x_; }
  double y() const { return y_; }
  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) =
      default;

 private:
  double x_;
  double y_;
};

/// Real driving function U(t), either the closed-form line control
///   U(t) = 2 c sqrt(4 t / (1 + c^2) + y0^2) + x0 - c y0
/// or a sampled curve.
class RealDriver {
 public:
  enum class Kind { closed_form_line, piecewise };

  static RealDriver line(double c, double x0, double y0);
  static RealDriver piecewise(PiecewiseCurve curve);

  Kind kind() const { return kind_; }
  double value(double t) const;
  StageValues stages(double a, double b) const;
  double next_breakpoint_after(double t) const;
  const PiecewiseCurve* curve() const { return curve_ ? &*curve_ : nullptr; }
  double slope() const { return c_; }  // c of the line control

 private:
  RealDriver(double c, double x0, double y0)
      : kind_(Kind::closed_form_line), c_(c), x0_(x0), y0_(y0) {}
  explicit RealDriver(PiecewiseCurve curve)
      : kind_(Kind::piecewise), curve_(std::move(curve)) {}

  Kind kind_;
  double c_ = 0.0;
  double x0_ = 0.0;
  double y0_ = 0.0;
  std::optional<PiecewiseCurve> curve_;
};

struct ChordalSample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Trajectory of the chordal equation; y is strictly increasing.
struct ChordalTrace {
  std::vector<ChordalSample> samples;
};

/// Fixed-step RK4 on
///   dx = 2 (U - x) / ((U - x)^2 + y^2),  dy = 2 y / ((U - x)^2 + y^2),
/// steps clamped to land on T and on piecewise-driver knots. Throws
/// std::runtime_error if the driver collides with the trajectory
/// ((U - x)^2 + y^2 below 1e-20; impossible while y stays bounded away
/// from 0, but guarded).
ChordalTrace integrate_chordal(const HalfPlanePoint& z0,
                               const RealDriver& driver, double T,
                               double step);

struct LineDriverResult {
  RealDriver driver;
  double t_hit = 0.0;  // (1 + c^2)(target.y^2 - y0^2)/4
};

/// The control whose trajectory runs along the straight segment from z0
/// through target, hitting it at t_hit. Throws std::domain_error when
/// target.y <= z0.y (unreachable).
LineDriverResult line_driver(const HalfPlanePoint& z0,
                             const HalfPlanePoint& target);

/// The reachable set of the chordal equation: z itself or Im z > Im z0.
bool halfplane_region_contains(const HalfPlanePoint& z0,
                               const HalfPlanePoint& z);

}  // namespace loewner
