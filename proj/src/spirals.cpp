// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/spirals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loewner {

namespace {

// Slack for the half-line constraint so exact endpoints survive rounding.
inline double domain_slack(double rho0, double phi) {
  return 1e-12 * (1.0 + rho0 + std::fabs(phi));
}

inline double spiral_rho(double rho0, double phi0, Sign sign, double phi) {
  const double rho = signum(sign) * (phi - phi0) + rho0;
  if (rho < -domain_slack(rho0, phi)) {
    throw std::domain_error("spiral point: angle outside the spiral half-line");
  }
  return std::max(rho, 0.0);
}

double simpson(double h, double fa, double fm, double fb) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double fa, double m, double fm,
                        double b, double fb, double whole, double tol,
                        int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(m - a, fa, flm, fm);
  const double right = simpson(b - m, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol,
                          depth - 1) +
         adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * tol,
                          depth - 1);
}

template <typename F>
double integrate_adaptive(const F& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  return adaptive_simpson(f, a, fa, m, fm, b, fb, simpson(b - a, fa, fm, fb),
                          tol, 48);
}

}  // namespace

DiskPoint hyp_spiral_point(const DiskPoint& z0, Sign sign, double phi) {
  if (z0.is_origin()) {
    throw std::domain_error("hyp_spiral_point: z0 must be nonzero");
  }
  const double rho0 = hyp_dist_origin(z0);
  const double phi0 = std::atan2(z0.im(), z0.re());
  return from_polar(spiral_rho(rho0, phi0, sign, phi), phi);
}

std::complex<double> euclid_spiral_point(std::complex<double> w0, Sign sign,
                                         double phi) {
  if (w0 == 0.0) {
    throw std::domain_error("euclid_spiral_point: w0 must be nonzero");
  }
  const double m0 = std::abs(w0);
  const double a0 = std::arg(w0);
  const double m = spiral_rho(m0, a0, sign, phi);
  return std::polar(m, phi);
}

SpiralArc gamma_arc(const DiskPoint& z0, Sign sign) {
  if (z0.is_origin()) {
    throw std::domain_error("gamma_arc: z0 must be nonzero");
  }
  SpiralArc arc;
  arc.anchor = z0;
  arc.sign = sign;
  arc.rho0 = hyp_dist_origin(z0);
  arc.phi0 = std::atan2(z0.im(), z0.re());

  const double span = std::min(arc.rho0, kPi);
  const double term_phi = arc.phi0 - signum(sign) * span;
  arc.terminal = hyp_spiral_point(z0, sign, term_phi);
  if (sign == Sign::plus) {
    arc.phi_lo = term_phi;
    arc.phi_hi = arc.phi0;
  } else {
    arc.phi_lo = arc.phi0;
    arc.phi_hi = term_phi;
  }
  return arc;
}

double SpiralArc::rho_at(double phi) const {
  if (phi < phi_lo - domain_slack(rho0, phi) ||
      phi > phi_hi + domain_slack(rho0, phi)) {
    throw std::domain_error("SpiralArc: angle outside the arc");
  }
  return spiral_rho(rho0, phi0, sign, std::clamp(phi, phi_lo, phi_hi));
}

DiskPoint SpiralArc::point_at(double phi) const {
  return from_polar(rho_at(phi), phi);
}

double hyp_arc_length(const SpiralArc& arc) {
  // gamma(phi) = tanh(rho(phi)/2) e^{i phi} with rho' = +/-1, so
  // |gamma'|^2 = (1/2 (1-r^2))^2 + r^2 and the hyperbolic speed is
  // 2 |gamma'| / (1 - r^2).
  const auto speed = [&arc](double phi) {
    const double r = std::tanh(0.5 * arc.rho_at(phi));
    const double one_m = 1.0 - r * r;
    const double dr = 0.5 * one_m;
    return 2.0 * std::sqrt(dr * dr + r * r) / one_m;
  };
  return integrate_adaptive(speed, arc.phi_lo, arc.phi_hi, 1e-10);
}

}  // namespace loewner
