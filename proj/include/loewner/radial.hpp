// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "loewner/driver.hpp"
#include "loewner/hyp_geom.hpp"
#include "loewner/spirals.hpp"

namespace loewner {

/// States with hyperbolic radius below this are treated as having reached
/// the attracting fixed point at the origin; the angle is numerically
/// meaningless past it and integration stops early.
inline constexpr double kRhoUnderflow = 1e-14;

/// Driving function kappa(t) = e^{i theta(t)} on the unit circle, either one
/// of the two closed-form boundary controls for a starting point z0 or a
/// sampled curve. theta is real-valued and lifted, so |kappa| = 1 exactly.
class CircleDriver {
 public:
  enum class Kind { closed_form_plus, closed_form_minus, piecewise };

  static CircleDriver optimal(const DiskPoint& z0, Sign sign);
  static CircleDriver piecewise(PiecewiseCurve curve);

  Kind kind() const { return kind_; }
  double theta(double t) const;
  std::complex<double> kappa(double t) const;
  StageValues stages(double a, double b) const;
  double next_breakpoint_after(double t) const;

  /// The sampled curve, or nullptr for the closed forms.
  const PiecewiseCurve* curve() const {
    return curve_ ? &*curve_ : nullptr;
  }

 private:
  CircleDriver(Kind kind, double rho0, double phi0)
      : kind_(kind), rho0_(rho0), phi0_(phi0) {}
  explicit CircleDriver(PiecewiseCurve curve)
      : kind_(Kind::piecewise), curve_(std::move(curve)) {}

  Kind kind_;
  double rho0_ = 0.0;
  double phi0_ = 0.0;
  std::optional<PiecewiseCurve> curve_;
};

struct TraceSample {
  double t = 0.0;
  double rho = 0.0;
  double phi = 0.0;  // lifted, continuous along the trace
};

/// Time-stamped trajectory in hyperbolic polar coordinates. t is strictly
/// increasing from 0 and rho is strictly decreasing. truncated marks traces
/// stopped early by rho underflow or a non-finite state.
struct PolarTrace {
  DiskPoint z0;
  std::vector<TraceSample> samples;
  bool truncated = false;
};

struct PolarRates {
  double drho = 0.0;
  double dphi = 0.0;
};

/// Right-hand side of the radial equation in hyperbolic polar coordinates.
/// With r = tanh(rho/2), w = r e^{i phi} and kappa = e^{i theta}:
///   drho = -2 r / |kappa - w|^2
///   dphi = -2 Im(conj(kappa) w) / |kappa - w|^2
/// Throws std::domain_error for rho <= 0.
PolarRates rhs_polar(double rho, double phi, double theta);

/// Classical fixed-step RK4 on (rho, phi), with steps clamped to land on T
/// and on the knots of piecewise drivers. The recorded lifted angle is
/// continuous by construction; the final sample is at t = T unless the
/// trace is truncated.
PolarTrace integrate(const DiskPoint& z0, const CircleDriver& driver,
                     double T, double step);

/// The closed-form boundary control of the given sign.
CircleDriver optimal_driver(const DiskPoint& z0, Sign sign);

/// Closed-form boundary trajectory in polar coordinates:
///   rho(t) = asinh(e^{-t} sinh(rho0))
///   phi(t) = arg z0 +/- (rho(t) - rho0)
HypPolar optimal_polar(const DiskPoint& z0, Sign sign, double t);
DiskPoint optimal_trajectory(const DiskPoint& z0, Sign sign, double t);

/// Time at which the two boundary trajectories first collide:
/// -log(sinh(rho0 - pi)/sinh(rho0)) when rho0 > pi, +infinity otherwise.
double t_max(const DiskPoint& z0);

struct InequalityReport {
  /// max over samples of rho(t) - rho0 + |phi(t) - phi0| (lifted angles);
  /// nonpositive on every admissible trace, zero along boundary controls.
  double max_set_residual = 0.0;
  /// max over consecutive samples of rho_{k+1} - rho_k; negative when rho
  /// is strictly decreasing.
  double max_rho_increase = 0.0;
  bool rho_strictly_decreasing = true;
  std::size_t n_samples = 0;
};

InequalityReport check_differential_inequality(const PolarTrace& trace);

}  // namespace loewner
