// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/chordal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "loewner/kernels/kernels.hpp"

namespace loewner {

namespace {
constexpr double kSingularity = 1e-20;
}

HalfPlanePoint::HalfPlanePoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    throw std::domain_error("HalfPlanePoint: requires finite x and y > 0");
  }
}

RealDriver RealDriver::line(double c, double x0, double y0) {
  if (!std::isfinite(c) || !(y0 > 0.0)) {
    throw std::domain_error("RealDriver::line: invalid parameters");
  }
  return RealDriver(c, x0, y0);
}

RealDriver RealDriver::piecewise(PiecewiseCurve curve) {
  return RealDriver(std::move(curve));
}

double RealDriver::value(double t) const {
  if (kind_ == Kind::piecewise) return curve_->value(t);
  const double y = std::sqrt(4.0 * t / (1.0 + c_ * c_) + y0_ * y0_);
  return 2.0 * c_ * y + x0_ - c_ * y0_;
}

StageValues RealDriver::stages(double a, double b) const {
  if (kind_ == Kind::piecewise) return curve_->stages(a, b);
  return {value(a), value(0.5 * (a + b)), value(b)};
}

double RealDriver::next_breakpoint_after(double t) const {
  if (kind_ == Kind::piecewise) return curve_->next_breakpoint_after(t);
  return std::numeric_limits<double>::infinity();
}

ChordalTrace integrate_chordal(const HalfPlanePoint& z0,
                               const RealDriver& driver, double T,
                               double step) {
  if (!(T > 0.0) || !(step > 0.0)) {
    throw std::domain_error("integrate_chordal: T and step must be positive");
  }
  const auto& kern = kernels::active();
  ChordalTrace trace;
  double x = z0.x();
  double y = z0.y();
  double x_c = 0.0;
  double y_c = 0.0;
  double t = 0.0;
  trace.samples.reserve(static_cast<std::size_t>(T / step) + 8);
  trace.samples.push_back({t, x, y});

  while (t < T) {
    const double bound = std::min(T, driver.next_breakpoint_after(t));
    double end = t + step;
    if (!(end < bound)) end = bound;
    const StageValues u = driver.stages(t, end);
    const double dx0 = u.at_start - x;
    if (dx0 * dx0 + y * y < kSingularity) {
      throw std::runtime_error(
          "integrate_chordal: driver collided with the trajectory");
    }
    double dt = end - t;
    kern.chordal_rk4_step(1, &x, &x_c, &y, &y_c, &u.at_start, &u.at_mid,
                          &u.at_end, &dt);
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw std::runtime_error("integrate_chordal: non-finite state");
    }
    t = end;
    trace.samples.push_back({t, x, y});
  }
  return trace;
}

LineDriverResult line_driver(const HalfPlanePoint& z0,
                             const HalfPlanePoint& target) {
  if (!(target.y() > z0.y())) {
    throw std::domain_error(
        "line_driver: target must satisfy Im target > Im z0");
  }
  const double c = (target.x() - z0.x()) / (target.y() - z0.y());
  const double t_hit =
      (1.0 + c * c) * (target.y() * target.y() - z0.y() * z0.y()) / 4.0;
  return {RealDriver::line(c, z0.x(), z0.y()), t_hit};
}

bool halfplane_region_contains(const HalfPlanePoint& z0,
                               const HalfPlanePoint& z) {
  return z == z0 || z.y() > z0.y();
}

}  // namespace loewner
