// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "loewner/chordal.hpp"
#include "loewner/driver.hpp"
#include "loewner/hyp_geom.hpp"
#include "loewner/kernels/kernels.hpp"
#include "loewner/radial.hpp"

// Seeded random-driver ensembles probing the reachable sets, batched across
// trajectory lanes so the SIMD kernels integrate four trials at once. Knot
// spacings are exponential with a configurable mean; driver values are
// uniform. All randomness comes from std::mt19937_64 with explicit inverse
// transforms, so reports are reproducible bit for bit across platforms.

namespace loewner {

/// Deterministic seed stream; trial `index` of run `seed` draws from
/// mt19937_64(mix_seed(seed, index)).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct RandomDriverParams {
  double horizon = 3.0;
  double mean_knot_spacing = 0.1;
};

/// Piecewise-constant angle knots on [0, horizon]: theta_i uniform in
/// [0, 2 pi), spacings Exp(mean_knot_spacing).
std::vector<DriverKnot> random_circle_knots(std::uint64_t seed,
                                            std::uint64_t index,
                                            const RandomDriverParams& params);

/// Piecewise-constant U knots with U_i uniform in [x0 - 5 y0, x0 + 5 y0].
std::vector<DriverKnot> random_real_knots(std::uint64_t seed,
                                          std::uint64_t index, double x0,
                                          double y0,
                                          const RandomDriverParams& params);

CircleDriver random_circle_driver(std::uint64_t seed, std::uint64_t index,
                                  const RandomDriverParams& params);
RealDriver random_real_driver(std::uint64_t seed, std::uint64_t index,
                              double x0, double y0,
                              const RandomDriverParams& params);

struct RadialEnsembleConfig {
  DiskPoint z0;
  double horizon = 3.0;
  double step = 1e-3;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  double mean_knot_spacing = 0.1;
  double membership_eps = 1e-7;
};

struct RadialEnsembleReport {
  /// max over every step endpoint of every trial of
  /// rho - rho0 + |phi - phi0| (lifted). Negative: all states interior.
  double max_set_residual = 0.0;
  std::size_t worst_trial = 0;
  double worst_t = 0.0;
  /// max over consecutive step endpoints of rho_next - rho_prev.
  double max_rho_increase = 0.0;
  /// contains_value failures over all final states and the worst state.
  std::size_t membership_failures = 0;
  std::size_t truncated_trials = 0;
  std::size_t samples_checked = 0;
};

RadialEnsembleReport run_radial_ensemble(
    const RadialEnsembleConfig& config,
    const kernels::Kernels& kern = kernels::active());

struct ChordalEnsembleConfig {
  double x0 = 0.0;
  double y0 = 1.0;
  double horizon = 3.0;
  double step = 1e-3;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  double mean_knot_spacing = 0.1;
};

struct ChordalEnsembleReport {
  /// min over every step endpoint (t > 0) of y(t) - y0; positive means the
  /// imaginary part grew strictly on every trial.
  double min_im_margin = 0.0;
  std::size_t worst_trial = 0;
  double worst_t = 0.0;
  std::size_t samples_checked = 0;
};

ChordalEnsembleReport run_chordal_ensemble(
    const ChordalEnsembleConfig& config,
    const kernels::Kernels& kern = kernels::active());

/// Integrates the closed-form boundary control and reports how tightly the
/// numeric trace realizes it.
struct OptimalControlReport {
  /// max |rho - rho0 + |phi - phi0|| along the integrated trace (the
  /// boundary is attained with equality).
  double max_equality_residual = 0.0;
  /// max |conj(kappa) w - s i |w|| along the trace (s = +/-1 by sign).
  double max_kappa_residual = 0.0;
  /// max deviation from the closed-form trajectory in rho and phi.
  double max_closed_form_dev = 0.0;
};

OptimalControlReport verify_optimal_control(const DiskPoint& z0, Sign sign,
                                            double T, double step);

/// Drives the line control to each target of the grid
/// {(x0 + dx, y0 * fy)} and reports the worst target miss and crossing-time
/// error against the closed-form hitting time.
struct LineGridReport {
  double max_target_miss = 0.0;
  double max_t_hit_error = 0.0;
  std::size_t targets = 0;
};

LineGridReport verify_line_grid(const HalfPlanePoint& z0,
                                std::span<const double> y_factors,
                                std::span<const double> x_offsets,
                                double step);

}  // namespace loewner
