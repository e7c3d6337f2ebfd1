// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/radial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "loewner/kernels/kernels.hpp"

namespace loewner {

namespace {

double polar_angle(const DiskPoint& z) { return std::atan2(z.im(), z.re()); }

}  // namespace

CircleDriver CircleDriver::optimal(const DiskPoint& z0, Sign sign) {
  if (z0.is_origin()) {
    throw std::domain_error("CircleDriver::optimal: z0 must be nonzero");
  }
  return CircleDriver(sign == Sign::plus ? Kind::closed_form_plus
                                         : Kind::closed_form_minus,
                      hyp_dist_origin(z0), polar_angle(z0));
}

CircleDriver CircleDriver::piecewise(PiecewiseCurve curve) {
  return CircleDriver(std::move(curve));
}

double CircleDriver::theta(double t) const {
  if (kind_ == Kind::piecewise) return curve_->value(t);
  // Evaluated in extended precision like optimal_polar, so the integrated
  // control stays within an ulp of the exact one.
  constexpr long double kHalfPiL = 1.57079632679489661923L;
  const long double rho_t =
      std::asinh(std::exp(-static_cast<long double>(t)) *
                 std::sinh(static_cast<long double>(rho0_)));
  if (kind_ == Kind::closed_form_plus) {
    // kappa = -i e^{i phi+(t)}
    return static_cast<double>(rho_t - rho0_ + phi0_ - kHalfPiL);
  }
  // kappa = +i e^{i phi-(t)}; the opposite prefactor realizes equality in
  // the minus branch of the differential inequality.
  return static_cast<double>(-(rho_t - rho0_) + phi0_ + kHalfPiL);
}

std::complex<double> CircleDriver::kappa(double t) const {
  return std::polar(1.0, theta(t));
}

StageValues CircleDriver::stages(double a, double b) const {
  if (kind_ == Kind::piecewise) return curve_->stages(a, b);
  return {theta(a), theta(0.5 * (a + b)), theta(b)};
}

double CircleDriver::next_breakpoint_after(double t) const {
  if (kind_ == Kind::piecewise) return curve_->next_breakpoint_after(t);
  return std::numeric_limits<double>::infinity();
}

PolarRates rhs_polar(double rho, double phi, double theta) {
  if (!(rho > 0.0)) {
    throw std::domain_error("rhs_polar: rho must be positive");
  }
  const double r = std::tanh(0.5 * rho);
  const double c = std::cos(theta - phi);
  const double s = std::sin(theta - phi);
  const double denom = (1.0 + r * r) - (2.0 * r) * c;
  const double m = (2.0 * r) / denom;
  return {-m, m * s};
}

PolarTrace integrate(const DiskPoint& z0, const CircleDriver& driver,
                     double T, double step) {
  if (z0.is_origin()) {
    throw std::domain_error("integrate: z0 must be nonzero");
  }
  if (!(T > 0.0) || !(step > 0.0)) {
    throw std::domain_error("integrate: T and step must be positive");
  }

  const auto& kern = kernels::active();
  PolarTrace trace;
  trace.z0 = z0;
  double rho = hyp_dist_origin(z0);
  double phi = polar_angle(z0);
  double rho_c = 0.0;
  double phi_c = 0.0;
  double t = 0.0;
  trace.samples.reserve(static_cast<std::size_t>(T / step) + 8);
  trace.samples.push_back({t, rho, phi});

  while (t < T) {
    const double bound = std::min(T, driver.next_breakpoint_after(t));
    double end = t + step;
    if (!(end < bound)) end = bound;
    const StageValues th = driver.stages(t, end);
    double dt = end - t;
    kern.radial_rk4_step(1, &rho, &rho_c, &phi, &phi_c, &th.at_start,
                         &th.at_mid, &th.at_end, &dt);
    if (!std::isfinite(rho) || !std::isfinite(phi)) {
      trace.truncated = true;
      break;
    }
    t = end;
    trace.samples.push_back({t, rho, phi});
    if (rho < kRhoUnderflow) {
      trace.truncated = t < T;
      break;
    }
  }
  return trace;
}

CircleDriver optimal_driver(const DiskPoint& z0, Sign sign) {
  return CircleDriver::optimal(z0, sign);
}

HypPolar optimal_polar(const DiskPoint& z0, Sign sign, double t) {
  if (z0.is_origin()) {
    throw std::domain_error("optimal_polar: z0 must be nonzero");
  }
  if (!(t >= 0.0)) {
    throw std::domain_error("optimal_polar: t must be >= 0");
  }
  const double rho0 = hyp_dist_origin(z0);
  const double phi0 = polar_angle(z0);
  const long double rho_t =
      std::asinh(std::exp(-static_cast<long double>(t)) *
                 std::sinh(static_cast<long double>(rho0)));
  const long double phi =
      phi0 + static_cast<long double>(signum(sign)) * (rho_t - rho0);
  return {static_cast<double>(rho_t), static_cast<double>(phi)};
}

DiskPoint optimal_trajectory(const DiskPoint& z0, Sign sign, double t) {
  return from_polar(optimal_polar(z0, sign, t));
}

double t_max(const DiskPoint& z0) {
  if (z0.is_origin()) {
    throw std::domain_error("t_max: z0 must be nonzero");
  }
  const double rho0 = hyp_dist_origin(z0);
  if (rho0 <= kPi) return std::numeric_limits<double>::infinity();
  return -std::log(std::sinh(rho0 - kPi) / std::sinh(rho0));
}

InequalityReport check_differential_inequality(const PolarTrace& trace) {
  if (trace.samples.empty()) {
    throw std::invalid_argument(
        "check_differential_inequality: empty trace");
  }
  const double rho0 = trace.samples.front().rho;
  const double phi0 = trace.samples.front().phi;
  InequalityReport report;
  report.n_samples = trace.samples.size();
  report.max_set_residual = -std::numeric_limits<double>::infinity();
  report.max_rho_increase = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < trace.samples.size(); ++k) {
    const TraceSample& s = trace.samples[k];
    const double residual = (s.rho - rho0) + std::fabs(s.phi - phi0);
    report.max_set_residual = std::max(report.max_set_residual, residual);
    if (k > 0) {
      const double inc = s.rho - trace.samples[k - 1].rho;
      report.max_rho_increase = std::max(report.max_rho_increase, inc);
      if (!(inc < 0.0)) report.rho_strictly_decreasing = false;
    }
  }
  return report;
}

}  // namespace loewner
