// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>

// Batch kernels for the inner integration loops. Every kernel advances n
// independent lanes; lane i carries its own state, driver samples and step
// size, so ensembles of trajectories with per-lane knot alignment run in
// lockstep. The scalar implementation is the reference; SIMD variants are
// selected at runtime and must produce bit-identical lanes (the kernels use
// a private exp/sincos so both paths share one operation sequence).

namespace loewner::kernels {

struct Kernels {
  const char* name;

  // One classical RK4 step of the radial equation in hyperbolic polar
  // coordinates. theta0/theta_mid/theta1 are the driver angles at the step
  // start, midpoint and end. rho_c/phi_c carry Neumaier compensation terms
  // across steps (initialize to zero); they keep the state-update roundoff
  // from random-walking over long horizons.
  void (*radial_rk4_step)(std::size_t n, double* rho, double* rho_c,
                          double* phi, double* phi_c, const double* theta0,
                          const double* theta_mid, const double* theta1,
                          const double* dt);

  // One RK4 step of the chordal equation; u0/u_mid/u1 sample U(t) the same
  // way, x_c/y_c compensate as above.
  void (*chordal_rk4_step)(std::size_t n, double* x, double* x_c, double* y,
                           double* y_c, const double* u0, const double* u_mid,
                           const double* u1, const double* dt);

  // out[i] = rho[i] - rho0 + |phi[i] - phi0| with lifted angles. Nonpositive
  // on every reachable state.
  void (*region_residual)(std::size_t n, const double* rho, const double* phi,
                          double rho0, double phi0, double* out);
};

const Kernels& scalar();

/// True when an AVX2+FMA variant is compiled in and the CPU supports it.
bool avx2_available();

/// The AVX2 kernel table; call only when avx2_available().
const Kernels& avx2();

/// Dispatch table: AVX2 when available, else scalar. The environment
/// variable LOEWNER_KERNELS=scalar|avx2|auto or force_implementation()
/// overrides the choice.
const Kernels& active();

/// Force "scalar", "avx2" or "auto". Throws std::invalid_argument for
/// unknown names or unavailable implementations.
void force_implementation(std::string_view name);

}  // namespace loewner::kernels
