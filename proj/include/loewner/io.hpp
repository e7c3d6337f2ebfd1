// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "loewner/chordal.hpp"
#include "loewner/driver.hpp"
#include "loewner/radial.hpp"
#include "loewner/value_region.hpp"

namespace loewner::io {

/// File-system failures (open/write); parse failures throw
/// std::invalid_argument instead.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// %.17g — round-trips every double exactly.
std::string format_g17(double x);

/// Parses "a", "a+bi", "a-bi", "bi", "i", "-i" with optional whitespace.
std::complex<double> parse_complex(std::string_view text);

/// Driver file: optional "interp: constant|linear" header, then one
/// "t value" pair per line; '#' starts a comment.
PiecewiseCurve parse_driver_text(std::istream& in);
PiecewiseCurve read_driver_file(const std::string& path);

/// CSV columns: t_param,re,im,rho,phi_lifted. t_param runs uniformly over
/// [0, 1] along the closed boundary.
void write_region_csv(std::ostream& out, const RegionSpec& spec,
                      std::size_t n_per_arc);

/// 800x800 viewport, unit circle mapped to a 760-px circle, region filled,
/// z0 marked.
void write_region_svg(std::ostream& out, const RegionSpec& spec,
                      std::size_t n_per_arc);

/// CSV columns: t,re,im,rho,phi_lifted,theta_driver; closed-form drivers add
/// rho_exact,phi_exact,rho_residual,phi_residual.
void write_radial_trace_csv(std::ostream& out, const PolarTrace& trace,
                            const CircleDriver& driver);

/// CSV columns: t,re,im,u_driver.
void write_chordal_trace_csv(std::ostream& out, const ChordalTrace& trace,
                             const RealDriver& driver);

}  // namespace loewner::io
