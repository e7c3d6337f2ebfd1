// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/hyp_geom.hpp"

#include <cmath>
#include <stdexcept>

namespace loewner {

DiskPoint::DiskPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::domain_error("DiskPoint: coordinates must be finite");
  }
  if (std::hypot(re, im) >= 1.0) {
    throw std::domain_error("DiskPoint: |z| must be < 1");
  }
}

double DiskPoint::modulus() const { return std::hypot(re_, im_); }

double hyp_dist(const DiskPoint& a, const DiskPoint& b) {
  const std::complex<double> za = a.value();
  const std::complex<double> zb = b.value();
  double m = std::abs((za - zb) / (1.0 - std::conj(zb) * za));
  if (m > kMaxUnitModulus) m = kMaxUnitModulus;
  return 2.0 * std::atanh(m);
}

double hyp_dist_origin(const DiskPoint& z) {
  double m = z.modulus();
  if (m > kMaxUnitModulus) m = kMaxUnitModulus;
  return 2.0 * std::atanh(m);
}

double wrap_angle(double delta) {
  double r = std::remainder(delta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double lift_angle(double principal, double hint) {
  const double k = std::round((hint - principal) / kTwoPi);
  double phi = principal + kTwoPi * k;
  if (phi <= hint - kPi) {
    phi += kTwoPi;
  } else if (phi > hint + kPi) {
    phi -= kTwoPi;
  }
  return phi;
}

HypPolar to_polar(const DiskPoint& z, double branch_hint) {
  if (z.is_origin()) {
    throw std::domain_error("to_polar: angle of the origin is undefined");
  }
  const double rho = hyp_dist_origin(z);
  const double phi = lift_angle(std::atan2(z.im(), z.re()), branch_hint);
  return {rho, phi};
}

DiskPoint from_polar(double rho, double phi) {
  if (!(rho >= 0.0)) {
    throw std::domain_error("from_polar: rho must be >= 0");
  }
  double r = std::tanh(0.5 * rho);
  if (r > kMaxUnitModulus) r = kMaxUnitModulus;
  return DiskPoint(r * std::cos(phi), r * std::sin(phi));
}

DiskPoint from_polar(const HypPolar& p) { return from_polar(p.rho, p.phi); }

}  // namespace loewner
