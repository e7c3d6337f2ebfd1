// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <numbers>

namespace loewner {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest Mobius-quotient modulus we feed into atanh. Beyond this the
// hyperbolic distance saturates near 2*atanh(1 - 1e-15) ~ 35.6.
inline constexpr double kMaxUnitModulus = 1.0 - 1e-15;

/// A point of the open unit disk. The origin is representable; points with
/// |z| >= 1 are rejected at construction.
class DiskPoint {
 public:
  constexpr DiskPoint() = default;
  DiskPoint(double re, double im);
  explicit DiskPoint(std::complex<double> z) : DiskPoint(z.real(), z.imag()) {}

  double re() const { return re_; }
  double im() const { return im_; }
  std::complex<double> value() const { return {re_, im_}; }
  double modulus() const;
  bool is_origin() const { return re_ == 0.0 && im_ == 0.0; }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
};

/// Hyperbolic polar coordinates: rho = d(0, z) in nats, phi a lifted
/// (unbounded) angle in radians.
struct HypPolar {
  double rho = 0.0;
  double phi = 0.0;
};

/// Distance in the curvature -1 metric 2|dz|/(1-|z|^2):
/// log((1+m)/(1-m)) with m = |(a-b)/(1 - conj(b) a)|, evaluated as 2*atanh(m).
double hyp_dist(const DiskPoint& a, const DiskPoint& b);

/// d(0, z) shortcut, equals 2*atanh(|z|).
double hyp_dist_origin(const DiskPoint& z);

/// Hyperbolic polar coordinates of z != 0. phi is the lift of arg z into
/// (branch_hint - pi, branch_hint + pi]. Throws std::domain_error for z = 0.
HypPolar to_polar(const DiskPoint& z, double branch_hint);

/// tanh(rho/2) * e^{i phi}. Inverse of to_polar up to multiples of 2*pi in
/// phi. Throws std::domain_error for rho < 0.
DiskPoint from_polar(double rho, double phi);
DiskPoint from_polar(const HypPolar& p);

/// Reduce an angle difference to (-pi, pi].
double wrap_angle(double delta);

/// Representative of `principal` mod 2*pi inside (hint - pi, hint + pi].
double lift_angle(double principal, double hint);

}  // namespace loewner
