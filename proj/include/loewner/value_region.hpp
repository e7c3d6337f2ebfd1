// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "loewner/hyp_geom.hpp"
#include "loewner/spirals.hpp"

namespace loewner {

/// Default slack for floating-point membership queries; pass 0 for the
/// exact inequality.
inline constexpr double kMembershipTol = 1e-9;

/// The value region of the normalized bounded univalent self-maps of the
/// disk at z0: the set of points z = |z| e^{i phi} with
/// d(0, z) - d(0, z0) <= -|phi - arg z0| for some real lift phi. Its
/// boundary consists of the two spiral arcs together with the origin. For
/// z0 = 0 the region degenerates to {0}.
class RegionSpec {
 public:
  explicit RegionSpec(const DiskPoint& z0);

  const DiskPoint& z0() const { return z0_; }
  double rho0() const { return rho0_; }
  double phi0() const { return phi0_; }
  bool degenerate() const { return !plus_.has_value(); }

  const SpiralArc& boundary_plus() const;
  const SpiralArc& boundary_minus() const;

 private:
  DiskPoint z0_;
  double rho0_ = 0.0;
  double phi0_ = 0.0;
  std::optional<SpiralArc> plus_;
  std::optional<SpiralArc> minus_;
};

/// Membership in the closed set (region plus the adjoined origin). Only the
/// lift of arg z nearest to arg z0 needs testing: it maximizes the
/// right-hand side -|phi - arg z0|, so all other lifts are weaker.
bool contains_closure(const RegionSpec& spec, const DiskPoint& z,
                      double eps = kMembershipTol);

/// Attainability as f(z0): membership minus the origin (univalence forces
/// f(z0) != f(0) = 0).
bool contains_value(const RegionSpec& spec, const DiskPoint& z,
                    double eps = kMembershipTol);

/// Convex iff |z0| <= tanh(pi/4).
bool is_convex(const RegionSpec& spec);

/// The origin is an isolated boundary point iff |z0| > tanh(pi/2).
bool origin_isolated(const RegionSpec& spec);

/// Closed boundary polyline: n samples of the plus arc from z0 to z1
/// followed by n samples of the minus arc from z1 back to z0. First and
/// last vertex are bit-identical; the junction vertex appears twice. For
/// the degenerate region returns the single origin vertex.
std::vector<std::complex<double>> boundary_polyline(const RegionSpec& spec,
                                                    std::size_t n_per_arc);

/// Boundary vertex with its polar data, for serialization.
struct BoundaryVertex {
  double phi = 0.0;  // lifted angle along the owning arc
  double rho = 0.0;
  std::complex<double> point;
};
std::vector<BoundaryVertex> boundary_samples(const RegionSpec& spec,
                                             std::size_t n_per_arc);

/// The disk of log(f(z0)/z0) over the class of normalized schlicht maps:
/// center log(1/(1-|z0|^2)), radius log((1+|z0|)/(1-|z0|)). A comparison
/// datum for a different normalization, not part of the region.
struct GrunskyDisk {
  std::complex<double> center;
  double radius = 0.0;
};
GrunskyDisk grunsky_disk(const DiskPoint& z0);

}  // namespace loewner
