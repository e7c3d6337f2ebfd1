// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: value regions, Loewner trajectories and
// seeded verification ensembles for the unit disk and the upper half-plane.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "loewner/cli.hpp"
#include "loewner/io.hpp"

namespace {

using loewner::cli::RunConfig;

struct RawArgs {
  std::string z0;
  std::string sign = "plus";
  std::string mode = "disk";
  std::string format = "csv";
};

void apply_raw(const RawArgs& raw, RunConfig& cfg) {
  if (!raw.z0.empty()) {
    cfg.z0 = loewner::io::parse_complex(raw.z0);
    cfg.z0_set = true;
  }
  cfg.sign = raw.sign == "minus" ? loewner::Sign::minus : loewner::Sign::plus;
  cfg.mode = raw.mode == "halfplane" ? RunConfig::Mode::halfplane
                                     : RunConfig::Mode::disk;
  cfg.format = raw.format == "svg" ? RunConfig::Format::svg
                                   : RunConfig::Format::csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Value regions of bounded univalent maps and the Loewner equation"};
  app.require_subcommand(1);

  RunConfig cfg;
  RawArgs raw;

  auto* region = app.add_subcommand(
      "region", "Boundary of the value region at z0 (CSV or SVG)");
  region->add_option("--z0", raw.z0, "base point, e.g. 0.5+0.4i")->required();
  region->add_option("--samples", cfg.samples, "samples per boundary arc");
  region->add_option("--out", cfg.output, "output file")->required();
  region->add_option("--format", raw.format, "csv|svg")
      ->check(CLI::IsMember({"csv", "svg"}));

  auto* traj = app.add_subcommand(
      "trajectory", "Integrate one Loewner trajectory and export it as CSV");
  traj->add_option("--z0", raw.z0, "starting point")->required();
  traj->add_option("--mode", raw.mode, "disk|halfplane")
      ->check(CLI::IsMember({"disk", "halfplane"}));
  traj->add_option("--sign", raw.sign, "plus|minus (closed-form control)")
      ->check(CLI::IsMember({"plus", "minus"}));
  traj->add_option("--driver", cfg.driver_spec,
                   "plus|minus|const:<v>|line:<c>|<driver file>");
  traj->add_option("--T", cfg.horizon, "integration horizon");
  traj->add_option("--step", cfg.step, "RK4 step size");
  traj->add_option("--out", cfg.output, "output CSV file")->required();

  auto* verify = app.add_subcommand(
      "verify", "Seeded random-driver verification; exit 1 on any violation");
  verify->add_option("--mode", raw.mode, "disk|halfplane")
      ->check(CLI::IsMember({"disk", "halfplane"}));
  verify->add_option("--z0", raw.z0, "base point (default by mode)");
  verify->add_option("--trials", cfg.trials, "number of random drivers");
  verify->add_option("--T", cfg.horizon, "integration horizon");
  verify->add_option("--step", cfg.step, "RK4 step size");
  verify->add_option("--seed", cfg.seed, "PRNG seed");
  verify->add_option("--tol", cfg.tolerance, "violation tolerance");
  verify->add_option("--out", cfg.output, "also write the report here");

  // trajectory default horizon is 5, verify keeps 3
  traj->callback([&cfg, traj] {
    if (traj->count("--T") == 0) cfg.horizon = 5.0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return loewner::cli::kExitUsage;
  }

  if (region->parsed()) cfg.command = RunConfig::Command::region;
  if (traj->parsed()) cfg.command = RunConfig::Command::trajectory;
  if (verify->parsed()) cfg.command = RunConfig::Command::verify;

  try {
    apply_raw(raw, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return loewner::cli::kExitUsage;
  }

  return loewner::cli::run(cfg, std::cout, std::cerr);
}
