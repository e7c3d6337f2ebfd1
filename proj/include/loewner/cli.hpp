// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "loewner/spirals.hpp"

namespace loewner::cli {

// Exit-code contract: 0 pass, 1 verification violation, 2 usage/domain
// error, 3 I/O error. cmd_verify doubles as a CI gate.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  enum class Command { region, trajectory, verify };
  enum class Mode { disk, halfplane };
  enum class Format { csv, svg };

  Command command = Command::region;
  Mode mode = Mode::disk;
  Format format = Format::csv;
  std::complex<double> z0{0.5, 0.4};
  bool z0_set = false;  // false: verify falls back to the mode default
  Sign sign = Sign::plus;
  std::string driver_spec;  // "plus" | "minus" | "const:<v>" | "line:<c>" | path
  double horizon = 3.0;     // --T
  double step = 1e-3;
  std::size_t samples = 512;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  double tolerance = 1e-7;
  std::string output;  // file path; verify also echoes the report to out
};

/// Executes one command; returns the process exit code. Diagnostics go to
/// err, reports and summaries to out.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace loewner::cli
