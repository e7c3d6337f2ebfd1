// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <stdexcept>

#include "loewner/value_region.hpp"

namespace loewner {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double u01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double exp_spacing(std::mt19937_64& eng, double mean) {
  // -mean log(1 - U) with U in [0, 1); floored to keep knots increasing.
  return std::max(-mean * std::log1p(-u01(eng)), 1e-12);
}

template <typename ValueFn>
std::vector<DriverKnot> random_knots(std::uint64_t seed, std::uint64_t index,
                                     const RandomDriverParams& params,
                                     ValueFn&& value) {
  if (!(params.horizon > 0.0) || !(params.mean_knot_spacing > 0.0)) {
    throw std::invalid_argument("random_knots: invalid parameters");
  }
  std::mt19937_64 eng(mix_seed(seed, index));
  std::vector<DriverKnot> knots;
  knots.push_back({0.0, value(eng)});
  double t = exp_spacing(eng, params.mean_knot_spacing);
  while (t < params.horizon) {
    knots.push_back({t, value(eng)});
    t += exp_spacing(eng, params.mean_knot_spacing);
  }
  return knots;
}

// Flattened per-lane knot storage for the batch loops.
struct KnotBatch {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<std::size_t> begin;  // trials + 1 offsets

  std::size_t lanes() const { return begin.size() - 1; }
};

template <typename KnotFn>
KnotBatch build_batch(std::size_t trials, KnotFn&& knots_for) {
  KnotBatch batch;
  batch.begin.reserve(trials + 1);
  batch.begin.push_back(0);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::vector<DriverKnot> knots = knots_for(i);
    for (const DriverKnot& k : knots) {
      batch.times.push_back(k.t);
      batch.values.push_back(k.value);
    }
    batch.begin.push_back(batch.times.size());
  }
  return batch;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

std::vector<DriverKnot> random_circle_knots(std::uint64_t seed,
                                            std::uint64_t index,
                                            const RandomDriverParams& params) {
  return random_knots(seed, index, params,
                      [](std::mt19937_64& eng) { return kTwoPi * u01(eng); });
}

std::vector<DriverKnot> random_real_knots(std::uint64_t seed,
                                          std::uint64_t index, double x0,
                                          double y0,
                                          const RandomDriverParams& params) {
  return random_knots(seed, index, params, [x0, y0](std::mt19937_64& eng) {
    return x0 + 5.0 * y0 * (2.0 * u01(eng) - 1.0);
  });
}

CircleDriver random_circle_driver(std::uint64_t seed, std::uint64_t index,
                                  const RandomDriverParams& params) {
  return CircleDriver::piecewise(
      PiecewiseCurve(random_circle_knots(seed, index, params),
                     Interp::constant));
}

RealDriver random_real_driver(std::uint64_t seed, std::uint64_t index,
                              double x0, double y0,
                              const RandomDriverParams& params) {
  return RealDriver::piecewise(PiecewiseCurve(
      random_real_knots(seed, index, x0, y0, params), Interp::constant));
}

RadialEnsembleReport run_radial_ensemble(const RadialEnsembleConfig& config,
                                         const kernels::Kernels& kern) {
  if (config.z0.is_origin()) {
    throw std::domain_error("run_radial_ensemble: z0 must be nonzero");
  }
  if (!(config.horizon > 0.0) || !(config.step > 0.0) || config.trials == 0) {
    throw std::invalid_argument("run_radial_ensemble: invalid configuration");
  }

  const std::size_t n = config.trials;
  const RandomDriverParams params{config.horizon, config.mean_knot_spacing};
  const KnotBatch batch = build_batch(n, [&](std::size_t i) {
    return random_circle_knots(config.seed, i, params);
  });

  const double rho0 = hyp_dist_origin(config.z0);
  const double phi0 = std::atan2(config.z0.im(), config.z0.re());
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> rho(n, rho0), phi(n, phi0), rho_prev(n);
  std::vector<double> rho_c(n, 0.0), phi_c(n, 0.0);
  std::vector<double> theta(n), dt(n, 0.0), res(n), t(n, 0.0), t_end(n);
  std::vector<std::size_t> kidx(batch.begin.begin(), batch.begin.end() - 1);
  std::vector<char> done(n, 0);

  RadialEnsembleReport report;
  report.max_set_residual = -inf;
  report.max_rho_increase = -inf;
  double worst_rho = rho0;
  double worst_phi = phi0;

  std::size_t remaining = n;
  while (remaining > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) {
        dt[i] = 0.0;
        continue;
      }
      const std::size_t last = batch.begin[i + 1] - 1;
      const double next_knot =
          kidx[i] < last ? batch.times[kidx[i] + 1] : inf;
      const double bound = std::min(config.horizon, next_knot);
      double end = t[i] + config.step;
      if (!(end < bound)) end = bound;
      dt[i] = end - t[i];
      t_end[i] = end;
      theta[i] = batch.values[kidx[i]];
    }
    std::memcpy(rho_prev.data(), rho.data(), n * sizeof(double));
    kern.radial_rk4_step(n, rho.data(), rho_c.data(), phi.data(),
                         phi_c.data(), theta.data(), theta.data(),
                         theta.data(), dt.data());
    kern.region_residual(n, rho.data(), phi.data(), rho0, phi0, res.data());

    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      ++report.samples_checked;
      if (res[i] > report.max_set_residual) {
        report.max_set_residual = res[i];
        report.worst_trial = i;
        report.worst_t = t_end[i];
        worst_rho = rho[i];
        worst_phi = phi[i];
      }
      report.max_rho_increase =
          std::max(report.max_rho_increase, rho[i] - rho_prev[i]);
      t[i] = t_end[i];
      const std::size_t last = batch.begin[i + 1] - 1;
      while (kidx[i] < last && batch.times[kidx[i] + 1] <= t[i]) ++kidx[i];
      if (t[i] >= config.horizon) {
        done[i] = 1;
        --remaining;
      } else if (rho[i] < kRhoUnderflow || !std::isfinite(rho[i])) {
        done[i] = 1;
        ++report.truncated_trials;
        --remaining;
      }
    }
  }

  const RegionSpec spec(config.z0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(rho[i]) || !std::isfinite(phi[i])) {
      ++report.membership_failures;
      continue;
    }
    const DiskPoint w = from_polar(rho[i], phi[i]);
    if (!contains_value(spec, w, config.membership_eps)) {
      ++report.membership_failures;
    }
  }
  if (!contains_value(spec, from_polar(worst_rho, worst_phi),
                      config.membership_eps)) {
    ++report.membership_failures;
  }
  return report;
}

ChordalEnsembleReport run_chordal_ensemble(const ChordalEnsembleConfig& config,
                                           const kernels::Kernels& kern) {
  if (!(config.y0 > 0.0)) {
    throw std::domain_error("run_chordal_ensemble: y0 must be positive");
  }
  if (!(config.horizon > 0.0) || !(config.step > 0.0) || config.trials == 0) {
    throw std::invalid_argument(
        "run_chordal_ensemble: invalid configuration");
  }

  const std::size_t n = config.trials;
  const RandomDriverParams params{config.horizon, config.mean_knot_spacing};
  const KnotBatch batch = build_batch(n, [&](std::size_t i) {
    return random_real_knots(config.seed, i, config.x0, config.y0, params);
  });

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> x(n, config.x0), y(n, config.y0);
  std::vector<double> x_c(n, 0.0), y_c(n, 0.0);
  std::vector<double> u(n), dt(n, 0.0), t(n, 0.0), t_end(n);
  std::vector<std::size_t> kidx(batch.begin.begin(), batch.begin.end() - 1);
  std::vector<char> done(n, 0);

  ChordalEnsembleReport report;
  report.min_im_margin = inf;

  std::size_t remaining = n;
  while (remaining > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) {
        dt[i] = 0.0;
        continue;
      }
      const std::size_t last = batch.begin[i + 1] - 1;
      const double next_knot =
          kidx[i] < last ? batch.times[kidx[i] + 1] : inf;
      const double bound = std::min(config.horizon, next_knot);
      double end = t[i] + config.step;
      if (!(end < bound)) end = bound;
      dt[i] = end - t[i];
      t_end[i] = end;
      u[i] = batch.values[kidx[i]];
    }
    kern.chordal_rk4_step(n, x.data(), x_c.data(), y.data(), y_c.data(),
                          u.data(), u.data(), u.data(), dt.data());
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      ++report.samples_checked;
      const double margin = y[i] - config.y0;
      if (margin < report.min_im_margin) {
        report.min_im_margin = margin;
        report.worst_trial = i;
        report.worst_t = t_end[i];
      }
      t[i] = t_end[i];
      const std::size_t last = batch.begin[i + 1] - 1;
      while (kidx[i] < last && batch.times[kidx[i] + 1] <= t[i]) ++kidx[i];
      if (t[i] >= config.horizon || !std::isfinite(y[i])) {
        done[i] = 1;
        --remaining;
      }
    }
  }
  return report;
}

OptimalControlReport verify_optimal_control(const DiskPoint& z0, Sign sign,
                                            double T, double step) {
  const CircleDriver driver = optimal_driver(z0, sign);
  const PolarTrace trace = integrate(z0, driver, T, step);
  const double s = signum(sign);
  const double rho0 = trace.samples.front().rho;
  const double phi0 = trace.samples.front().phi;

  OptimalControlReport report;
  for (const TraceSample& smp : trace.samples) {
    const double equality = (smp.rho - rho0) + std::fabs(smp.phi - phi0);
    report.max_equality_residual =
        std::max(report.max_equality_residual, std::fabs(equality));

    const std::complex<double> w = from_polar(smp.rho, smp.phi).value();
    const std::complex<double> expected{0.0, s * std::tanh(0.5 * smp.rho)};
    report.max_kappa_residual =
        std::max(report.max_kappa_residual,
                 std::abs(std::conj(driver.kappa(smp.t)) * w - expected));

    const HypPolar exact = optimal_polar(z0, sign, smp.t);
    report.max_closed_form_dev =
        std::max({report.max_closed_form_dev, std::fabs(smp.rho - exact.rho),
                  std::fabs(smp.phi - exact.phi)});
  }
  return report;
}

LineGridReport verify_line_grid(const HalfPlanePoint& z0,
                                std::span<const double> y_factors,
                                std::span<const double> x_offsets,
                                double step) {
  LineGridReport report;
  for (const double fy : y_factors) {
    for (const double dx : x_offsets) {
      const HalfPlanePoint target(z0.x() + dx, z0.y() * fy);
      const auto [driver, t_hit] = line_driver(z0, target);
      {
        const ChordalTrace hit = integrate_chordal(z0, driver, t_hit, step);
        const ChordalSample& last = hit.samples.back();
        const double miss =
            std::hypot(last.x - target.x(), last.y - target.y());
        report.max_target_miss = std::max(report.max_target_miss, miss);
      }

      // Refine the y-crossing time by bisection over one RK4 substep from
      // the last sample below target.y; integrate past t_hit so the
      // crossing is strictly bracketed.
      const ChordalTrace trace =
          integrate_chordal(z0, driver, t_hit + 10.0 * step, step);
      std::size_t k = trace.samples.size() - 1;
      while (k > 0 && trace.samples[k].y >= target.y()) --k;
      if (k + 1 >= trace.samples.size()) {
        // Crossing not bracketed; report it as an unbounded time error.
        report.max_t_hit_error = std::numeric_limits<double>::infinity();
        ++report.targets;
        continue;
      }
      const ChordalSample& base = trace.samples[k];
      double lo = 0.0, hi = trace.samples[k + 1].t - base.t;
      for (int iter = 0; iter < 64 && hi - lo > 0.0; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double xx = base.x, yy = base.y;
        double xx_c = 0.0, yy_c = 0.0;
        const StageValues u = driver.stages(base.t, base.t + mid);
        double dts = mid;
        kernels::active().chordal_rk4_step(1, &xx, &xx_c, &yy, &yy_c,
                                           &u.at_start, &u.at_mid, &u.at_end,
                                           &dts);
        (yy < target.y() ? lo : hi) = mid;
      }
      const double t_cross = base.t + 0.5 * (lo + hi);
      report.max_t_hit_error =
          std::max(report.max_t_hit_error, std::fabs(t_cross - t_hit));
      ++report.targets;
    }
  }
  return report;
}

}  // namespace loewner
