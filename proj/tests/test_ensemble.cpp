// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "loewner/ensemble.hpp"
#include "loewner/value_region.hpp"

using namespace loewner;

namespace {

// Wrong-sign fixture: mirrors the radial rho update so the hyperbolic
// distance grows instead of shrinking. Used as a negative control.
void corrupted_radial_step(std::size_t n, double* rho, double* rho_c,
                           double* phi, double* phi_c, const double* theta0,
                           const double* theta_mid, const double* theta1,
                           const double* dt) {
  std::vector<double> before(rho, rho + n);
  kernels::scalar().radial_rk4_step(n, rho, rho_c, phi, phi_c, theta0,
                                    theta_mid, theta1, dt);
  for (std::size_t i = 0; i < n; ++i) {
    rho[i] = before[i] + (before[i] - rho[i]);
  }
}

}  // namespace

TEST_CASE("random knot streams are deterministic and well-formed") {
  const RandomDriverParams params{3.0, 0.1};
  const auto a = random_circle_knots(123, 7, params);
  const auto b = random_circle_knots(123, 7, params);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].value == b[i].value);
  }
  CHECK(a.front().t == 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) CHECK(a[i].t > a[i - 1].t);
    CHECK(a[i].t < params.horizon);
    CHECK(a[i].value >= 0.0);
    CHECK(a[i].value < kTwoPi);
  }
  // Different trials and seeds decorrelate.
  CHECK(random_circle_knots(123, 8, params).front().value !=
        a.front().value);
  CHECK(random_circle_knots(124, 7, params).front().value !=
        a.front().value);

  const auto real_knots = random_real_knots(9, 3, 0.5, 2.0, params);
  for (const auto& k : real_knots) {
    CHECK(k.value >= 0.5 - 10.0);
    CHECK(k.value <= 0.5 + 10.0);
  }
}

TEST_CASE("batch ensemble matches per-trial integration bit for bit") {
  RadialEnsembleConfig config;
  config.z0 = DiskPoint(0.5, 0.4);
  config.horizon = 1.0;
  config.step = 1e-3;
  config.trials = 8;
  config.seed = 97;
  const RandomDriverParams params{config.horizon, config.mean_knot_spacing};

  // Recompute the worst over-all-samples residual from per-trial traces
  // produced by the public single-trajectory integrator; the batch loop
  // must schedule the exact same steps and hence reproduce it bit for bit.
  double worst = -1e300;
  std::size_t worst_trial = 0;
  const double rho0 = hyp_dist(DiskPoint(), config.z0);
  const double phi0 = std::atan2(config.z0.im(), config.z0.re());
  for (std::size_t i = 0; i < config.trials; ++i) {
    const CircleDriver driver = random_circle_driver(config.seed, i, params);
    const PolarTrace trace =
        integrate(config.z0, driver, config.horizon, config.step);
    for (std::size_t k = 1; k < trace.samples.size(); ++k) {
      const TraceSample& s = trace.samples[k];
      const double res = (s.rho - rho0) + std::fabs(s.phi - phi0);
      if (res > worst) {
        worst = res;
        worst_trial = i;
      }
    }
  }

  const RadialEnsembleReport report = run_radial_ensemble(config);
  CHECK(report.max_set_residual == worst);
  CHECK(report.worst_trial == worst_trial);
  CHECK(report.membership_failures == 0);
}

TEST_CASE("radial ensemble stays strictly inside the region") {
  RadialEnsembleConfig config;
  config.z0 = DiskPoint(0.5, 0.4);
  config.horizon = 1.5;
  config.trials = 400;
  config.seed = 2026;
  const RadialEnsembleReport report = run_radial_ensemble(config);
  CHECK(report.max_set_residual < 0.0);
  CHECK(report.max_rho_increase < 0.0);
  CHECK(report.membership_failures == 0);
  CHECK(report.samples_checked > config.trials * 1000);

  // Determinism: identical configuration, identical report.
  const RadialEnsembleReport again = run_radial_ensemble(config);
  CHECK(again.max_set_residual == report.max_set_residual);
  CHECK(again.worst_trial == report.worst_trial);
  CHECK(again.worst_t == report.worst_t);
  CHECK(again.samples_checked == report.samples_checked);

  // A different seed probes different drivers.
  RadialEnsembleConfig other = config;
  other.seed = 2027;
  CHECK(run_radial_ensemble(other).max_set_residual !=
        report.max_set_residual);
}

TEST_CASE("scalar and AVX2 ensembles agree bit for bit") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 unavailable; skipping");
    return;
  }
  RadialEnsembleConfig config;
  config.z0 = DiskPoint(0.5, 0.4);
  config.horizon = 1.0;
  config.trials = 64;
  config.seed = 5;
  const auto s = run_radial_ensemble(config, kernels::scalar());
  const auto v = run_radial_ensemble(config, kernels::avx2());
  CHECK(s.max_set_residual == v.max_set_residual);
  CHECK(s.worst_trial == v.worst_trial);
  CHECK(s.worst_t == v.worst_t);
  CHECK(s.max_rho_increase == v.max_rho_increase);
  CHECK(s.samples_checked == v.samples_checked);
}

TEST_CASE("corrupted integrator is caught as a violation") {
  kernels::Kernels corrupted = kernels::scalar();
  corrupted.name = "corrupted";
  corrupted.radial_rk4_step = &corrupted_radial_step;

  RadialEnsembleConfig config;
  config.z0 = DiskPoint(0.5, 0.4);
  config.horizon = 0.5;
  config.trials = 16;
  config.seed = 1;
  const RadialEnsembleReport report =
      run_radial_ensemble(config, corrupted);
  CHECK(report.max_set_residual > 1e-3);
}

TEST_CASE("chordal ensemble keeps the imaginary part growing") {
  ChordalEnsembleConfig config;
  config.x0 = 0.0;
  config.y0 = 1.0;
  config.horizon = 1.5;
  config.trials = 400;
  config.seed = 11;
  const ChordalEnsembleReport report = run_chordal_ensemble(config);
  CHECK(report.min_im_margin > 0.0);
  CHECK(report.samples_checked > config.trials * 1000);

  const ChordalEnsembleReport again = run_chordal_ensemble(config);
  CHECK(again.min_im_margin == report.min_im_margin);
  CHECK(again.worst_trial == report.worst_trial);
}

TEST_CASE("optimal control verification is tight") {
  for (const Sign sign : {Sign::plus, Sign::minus}) {
    const OptimalControlReport report =
        verify_optimal_control(DiskPoint(0.5, 0.4), sign, 3.0, 1e-3);
    CHECK(report.max_equality_residual < 1e-12);
    CHECK(report.max_kappa_residual < 1e-12);
    CHECK(report.max_closed_form_dev < 1e-12);
  }
}

TEST_CASE("line grid verification hits all targets") {
  const double y_factors[] = {1.1, 2.0};
  const double x_offsets[] = {-3.0, 0.0, 3.0};
  const LineGridReport report =
      verify_line_grid(HalfPlanePoint(0.0, 1.0), y_factors, x_offsets, 1e-3);
  CHECK(report.targets == 6);
  CHECK(report.max_target_miss < 1e-7);
  CHECK(report.max_t_hit_error < 1e-7);
}

TEST_CASE("ensemble configuration validation") {
  RadialEnsembleConfig bad;
  bad.z0 = DiskPoint();
  CHECK_THROWS_AS(run_radial_ensemble(bad), std::domain_error);
  RadialEnsembleConfig none;
  none.z0 = DiskPoint(0.5, 0.0);
  none.trials = 0;
  CHECK_THROWS_AS(run_radial_ensemble(none), std::invalid_argument);
  ChordalEnsembleConfig badc;
  badc.y0 = -1.0;
  CHECK_THROWS_AS(run_chordal_ensemble(badc), std::domain_error);
}
