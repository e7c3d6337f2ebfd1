// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/value_region.hpp"

#include <cmath>
#include <stdexcept>

namespace loewner {

RegionSpec::RegionSpec(const DiskPoint& z0) : z0_(z0) {
  if (z0.is_origin()) return;  // degenerate region {0}
  rho0_ = hyp_dist_origin(z0);
  phi0_ = std::atan2(z0.im(), z0.re());
  plus_ = gamma_arc(z0, Sign::plus);
  minus_ = gamma_arc(z0, Sign::minus);
}

const SpiralArc& RegionSpec::boundary_plus() const {
  if (!plus_) throw std::domain_error("RegionSpec: degenerate region has no arcs");
  return *plus_;
}

const SpiralArc& RegionSpec::boundary_minus() const {
  if (!minus_) throw std::domain_error("RegionSpec: degenerate region has no arcs");
  return *minus_;
}

bool contains_closure(const RegionSpec& spec, const DiskPoint& z, double eps) {
  if (z.is_origin()) return true;
  if (spec.degenerate()) return false;
  const double rho = hyp_dist_origin(z);
  const double dphi = wrap_angle(std::atan2(z.im(), z.re()) - spec.phi0());
  return rho - spec.rho0() + std::fabs(dphi) <= eps;
}

bool contains_value(const RegionSpec& spec, const DiskPoint& z, double eps) {
  return !z.is_origin() && contains_closure(spec, z, eps);
}

bool is_convex(const RegionSpec& spec) {
  return spec.z0().modulus() <= std::tanh(kPi / 4.0);
}

bool origin_isolated(const RegionSpec& spec) {
  return spec.z0().modulus() > std::tanh(kPi / 2.0);
}

std::vector<BoundaryVertex> boundary_samples(const RegionSpec& spec,
                                             std::size_t n_per_arc) {
  if (spec.degenerate()) {
    return {BoundaryVertex{0.0, 0.0, {0.0, 0.0}}};
  }
  if (n_per_arc < 2) {
    throw std::invalid_argument("boundary_samples: need at least 2 per arc");
  }
  std::vector<BoundaryVertex> out;
  out.reserve(2 * n_per_arc);
  const auto sample_arc = [&out, n_per_arc](const SpiralArc& arc, double from,
                                            double to) {
    for (std::size_t k = 0; k < n_per_arc; ++k) {
      const double phi =
          k + 1 == n_per_arc
              ? to
              : from + (to - from) * (static_cast<double>(k) /
                                      static_cast<double>(n_per_arc - 1));
      const DiskPoint p = arc.point_at(phi);
      out.push_back({phi, arc.rho_at(phi), p.value()});
    }
  };
  const SpiralArc& plus = spec.boundary_plus();
  const SpiralArc& minus = spec.boundary_minus();
  sample_arc(plus, plus.anchor_phi(), plus.terminal_phi());
  sample_arc(minus, minus.terminal_phi(), minus.anchor_phi());
  return out;
}

std::vector<std::complex<double>> boundary_polyline(const RegionSpec& spec,
                                                    std::size_t n_per_arc) {
  const auto rows = boundary_samples(spec, n_per_arc);
  std::vector<std::complex<double>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.point);
  return out;
}

GrunskyDisk grunsky_disk(const DiskPoint& z0) {
  if (z0.is_origin()) {
    throw std::domain_error("grunsky_disk: z0 must be nonzero");
  }
  const double m = z0.modulus();
  return {{-std::log1p(-m * m), 0.0}, 2.0 * std::atanh(m)};
}

}  // namespace loewner
