// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "loewner/ensemble.hpp"
#include "loewner/io.hpp"
#include "loewner/kernels/kernels.hpp"
#include "loewner/value_region.hpp"

namespace loewner::cli {

namespace {

using io::format_g17;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io::IoError("cannot open output file: " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw io::IoError("failed writing output file: " + path);
}

std::string complex_str(std::complex<double> z) {
  return format_g17(z.real()) + (z.imag() < 0.0 ? "" : "+") +
         format_g17(z.imag()) + "i";
}

CircleDriver resolve_circle_driver(const RunConfig& cfg,
                                   const DiskPoint& z0) {
  const std::string& spec = cfg.driver_spec;
  if (spec.empty()) return optimal_driver(z0, cfg.sign);
  if (spec == "plus") return optimal_driver(z0, Sign::plus);
  if (spec == "minus") return optimal_driver(z0, Sign::minus);
  if (spec.rfind("const:", 0) == 0) {
    return CircleDriver::piecewise(PiecewiseCurve(
        {{0.0, io::parse_complex(spec.substr(6)).real()}}, Interp::constant));
  }
  return CircleDriver::piecewise(io::read_driver_file(spec));
}

RealDriver resolve_real_driver(const RunConfig& cfg,
                               const HalfPlanePoint& z0) {
  const std::string& spec = cfg.driver_spec;
  if (spec.empty()) {
    throw std::invalid_argument(
        "halfplane trajectory needs --driver (line:<c>, const:<U> or a file)");
  }
  if (spec.rfind("line:", 0) == 0) {
    return RealDriver::line(io::parse_complex(spec.substr(5)).real(), z0.x(),
                            z0.y());
  }
  if (spec.rfind("const:", 0) == 0) {
    return RealDriver::piecewise(PiecewiseCurve(
        {{0.0, io::parse_complex(spec.substr(6)).real()}}, Interp::constant));
  }
  return RealDriver::piecewise(io::read_driver_file(spec));
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    throw std::invalid_argument("region: --out is required");
  }
  const DiskPoint z0{cfg.z0};
  const RegionSpec spec(z0);

  auto file = open_output(cfg.output);
  if (cfg.format == RunConfig::Format::svg) {
    io::write_region_svg(file, spec, cfg.samples);
  } else {
    io::write_region_csv(file, spec, cfg.samples);
  }
  finish_output(file, cfg.output);

  out << "region z0=" << complex_str(cfg.z0) << '\n';
  out << "is_convex=" << (is_convex(spec) ? "true" : "false") << '\n';
  out << "origin_isolated=" << (origin_isolated(spec) ? "true" : "false")
      << '\n';
  if (spec.degenerate()) {
    out << "degenerate=true (single point {0})\n";
    out << "arc_length=0\nt_max=inf\n";
  } else {
    const double len_plus = hyp_arc_length(spec.boundary_plus());
    const double len_minus = hyp_arc_length(spec.boundary_minus());
    const double rho0 = spec.rho0();
    const double closed = rho0 <= kPi
                              ? std::sinh(rho0)
                              : std::sinh(rho0) - std::sinh(rho0 - kPi);
    out << "rho0=" << format_g17(rho0) << " phi0=" << format_g17(spec.phi0())
        << '\n';
    out << "arc_length_plus=" << format_g17(len_plus)
        << " arc_length_minus=" << format_g17(len_minus)
        << " closed_form=" << format_g17(closed) << '\n';
    const double tm = t_max(z0);
    out << "t_max=" << (std::isinf(tm) ? "inf" : format_g17(tm)) << '\n';
  }
  out << "wrote " << cfg.output << '\n';
  return kExitOk;
}

int cmd_trajectory(const RunConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    throw std::invalid_argument("trajectory: --out is required");
  }
  auto file = open_output(cfg.output);

  if (cfg.mode == RunConfig::Mode::halfplane) {
    const HalfPlanePoint z0(cfg.z0.real(), cfg.z0.imag());
    const RealDriver driver = resolve_real_driver(cfg, z0);
    const ChordalTrace trace =
        integrate_chordal(z0, driver, cfg.horizon, cfg.step);
    io::write_chordal_trace_csv(file, trace, driver);
    finish_output(file, cfg.output);
    const ChordalSample& last = trace.samples.back();
    out << "trajectory mode=halfplane z0=" << complex_str(cfg.z0)
        << " samples=" << trace.samples.size() << '\n';
    out << "final t=" << format_g17(last.t) << " w=" << format_g17(last.x)
        << (last.y < 0 ? "" : "+") << format_g17(last.y) << "i\n";
    out << "wrote " << cfg.output << '\n';
    return kExitOk;
  }

  const DiskPoint z0{cfg.z0};
  const CircleDriver driver = resolve_circle_driver(cfg, z0);
  const PolarTrace trace = integrate(z0, driver, cfg.horizon, cfg.step);
  io::write_radial_trace_csv(file, trace, driver);
  finish_output(file, cfg.output);

  const TraceSample& last = trace.samples.back();
  out << "trajectory mode=disk z0=" << complex_str(cfg.z0)
      << " samples=" << trace.samples.size()
      << " truncated=" << (trace.truncated ? "true" : "false") << '\n';
  out << "final t=" << format_g17(last.t) << " rho=" << format_g17(last.rho)
      << " phi=" << format_g17(last.phi) << '\n';
  if (driver.kind() != CircleDriver::Kind::piecewise) {
    const Sign sign = driver.kind() == CircleDriver::Kind::closed_form_minus
                          ? Sign::minus
                          : Sign::plus;
    const auto rep = verify_optimal_control(z0, sign, cfg.horizon, cfg.step);
    out << "closed_form_dev=" << format_g17(rep.max_closed_form_dev)
        << " equality_residual=" << format_g17(rep.max_equality_residual)
        << '\n';
  }
  out << "wrote " << cfg.output << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream report;
  std::size_t violations = 0;
  const double tol = cfg.tolerance;

  const bool disk = cfg.mode == RunConfig::Mode::disk;
  const std::complex<double> z0 =
      cfg.z0_set ? cfg.z0
                 : (disk ? std::complex<double>{0.5, 0.4}
                         : std::complex<double>{0.0, 1.0});

  report << "mode=" << (disk ? "disk" : "halfplane") << '\n';
  report << "z0=" << complex_str(z0) << '\n';
  report << "trials=" << cfg.trials << '\n';
  report << "horizon=" << format_g17(cfg.horizon) << '\n';
  report << "step=" << format_g17(cfg.step) << '\n';
  report << "seed=" << cfg.seed << '\n';
  report << "tol=" << format_g17(tol) << '\n';
  report << "kernel=" << kernels::active().name << '\n';

  if (disk) {
    const DiskPoint p0{z0};
    RadialEnsembleConfig ec;
    ec.z0 = p0;
    ec.horizon = cfg.horizon;
    ec.step = cfg.step;
    ec.trials = cfg.trials;
    ec.seed = cfg.seed;
    ec.membership_eps = tol;
    const RadialEnsembleReport rep = run_radial_ensemble(ec);

    report << "radial.samples_checked=" << rep.samples_checked << '\n';
    report << "radial.max_set_residual=" << format_g17(rep.max_set_residual)
           << '\n';
    report << "radial.worst_trial=" << rep.worst_trial
           << " radial.worst_t=" << format_g17(rep.worst_t) << '\n';
    report << "radial.max_rho_increase=" << format_g17(rep.max_rho_increase)
           << '\n';
    report << "radial.truncated_trials=" << rep.truncated_trials << '\n';
    report << "radial.membership_failures=" << rep.membership_failures
           << '\n';
    if (rep.max_set_residual > tol) ++violations;
    if (!(rep.max_rho_increase < 0.0)) ++violations;
    if (rep.membership_failures != 0) ++violations;

    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const char* tag = sign == Sign::plus ? "plus" : "minus";
      const OptimalControlReport oc =
          verify_optimal_control(p0, sign, cfg.horizon, cfg.step);
      report << "optimal." << tag
             << ".equality_residual=" << format_g17(oc.max_equality_residual)
             << '\n';
      report << "optimal." << tag
             << ".kappa_residual=" << format_g17(oc.max_kappa_residual)
             << '\n';
      report << "optimal." << tag
             << ".closed_form_dev=" << format_g17(oc.max_closed_form_dev)
             << '\n';
      if (oc.max_equality_residual > tol) ++violations;
      if (oc.max_kappa_residual > tol) ++violations;
      if (oc.max_closed_form_dev > tol) ++violations;
    }
  } else {
    const HalfPlanePoint p0(z0.real(), z0.imag());
    ChordalEnsembleConfig ec;
    ec.x0 = p0.x();
    ec.y0 = p0.y();
    ec.horizon = cfg.horizon;
    ec.step = cfg.step;
    ec.trials = cfg.trials;
    ec.seed = cfg.seed;
    const ChordalEnsembleReport rep = run_chordal_ensemble(ec);

    report << "chordal.samples_checked=" << rep.samples_checked << '\n';
    report << "chordal.min_im_margin=" << format_g17(rep.min_im_margin)
           << '\n';
    report << "chordal.worst_trial=" << rep.worst_trial
           << " chordal.worst_t=" << format_g17(rep.worst_t) << '\n';
    if (!(rep.min_im_margin > 0.0)) ++violations;

    const double y_factors[] = {1.1, 2.0, 5.0};
    const double x_offsets[] = {-3.0, 0.0, 3.0};
    const LineGridReport grid =
        verify_line_grid(p0, y_factors, x_offsets, cfg.step);
    report << "line_grid.targets=" << grid.targets << '\n';
    report << "line_grid.max_target_miss=" << format_g17(grid.max_target_miss)
           << '\n';
    report << "line_grid.max_t_hit_error="
           << format_g17(grid.max_t_hit_error) << '\n';
    if (grid.max_target_miss > tol) ++violations;
    if (grid.max_t_hit_error > tol) ++violations;
  }

  report << "violations=" << violations << '\n';
  report << "result=" << (violations == 0 ? "PASS" : "FAIL") << '\n';

  out << report.str();
  if (!cfg.output.empty()) {
    auto file = open_output(cfg.output);
    file << report.str();
    finish_output(file, cfg.output);
  }
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case RunConfig::Command::region:
        return cmd_region(config, out);
      case RunConfig::Command::trajectory:
        return cmd_trajectory(config, out);
      case RunConfig::Command::verify:
        return cmd_verify(config, out);
    }
    return kExitUsage;
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace loewner::cli
