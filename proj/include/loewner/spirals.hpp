// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "loewner/hyp_geom.hpp"

namespace loewner {

enum class Sign { plus, minus };

inline double signum(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

/// Point of the hyperbolic Archimedean spiral through 0 and z0 at lifted
/// angle phi: d(0, .) = +/-(phi - arg z0) + d(0, z0). The plus spiral lives
/// on phi >= arg z0 - d(0, z0), the minus spiral on phi <= arg z0 + d(0, z0).
DiskPoint hyp_spiral_point(const DiskPoint& z0, Sign sign, double phi);

/// Euclidean counterpart: |w| = +/-(phi - arg w0) + |w0| with the analogous
/// half-line constraint.
std::complex<double> euclid_spiral_point(std::complex<double> w0, Sign sign,
                                         double phi);

/// The boundary arc of the value region carried by one spiral: the piece
/// between z0 and the terminal point z1. z1 is the origin when
/// d(0, z0) <= pi, otherwise the spiral point at hyperbolic distance
/// d(0, z0) - pi whose lifted argument is arg z0 -/+ pi.
struct SpiralArc {
  DiskPoint anchor;
  Sign sign = Sign::plus;
  double rho0 = 0.0;    // d(0, z0)
  double phi0 = 0.0;    // principal arg z0
  DiskPoint terminal;   // z1 (the origin when rho0 <= pi)
  double phi_lo = 0.0;  // closed interval of lifted angles covered
  double phi_hi = 0.0;

  double anchor_phi() const { return sign == Sign::plus ? phi_hi : phi_lo; }
  double terminal_phi() const { return sign == Sign::plus ? phi_lo : phi_hi; }

  /// Hyperbolic radius at a lifted angle inside [phi_lo, phi_hi].
  double rho_at(double phi) const;
  DiskPoint point_at(double phi) const;
};

SpiralArc gamma_arc(const DiskPoint& z0, Sign sign);

/// Hyperbolic length of the arc by adaptive quadrature of
/// 2 |gamma'(phi)| / (1 - |gamma(phi)|^2). Matches sinh(rho0) for
/// rho0 <= pi and sinh(rho0) - sinh(rho0 - pi) otherwise.
double hyp_arc_length(const SpiralArc& arc);

}  // namespace loewner
