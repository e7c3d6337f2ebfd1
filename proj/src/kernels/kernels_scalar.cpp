// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0

// Scalar reference kernels. The AVX2 variant in kernels_avx2.cpp mirrors the
// exact expression trees below; any change here must be replicated there to
// keep the two paths bit-identical.

#include <cmath>
#include <cstddef>

#include "loewner/kernels/kernels.hpp"
#include "loewner/kernels/vmath.hpp"

namespace loewner::kernels {

namespace {

struct Rates {
  double drho;
  double dphi;
};

// Radial right-hand side in polar form. With r = tanh(rho/2):
//   drho = -2 r / (1 + r^2 - 2 r cos(theta - phi))
//   dphi = +2 r sin(theta - phi) / (1 + r^2 - 2 r cos(theta - phi))
inline Rates radial_rhs(double rho, double phi, double theta) {
  const double r = vm::tanh_half(rho);
  double s, c;
  vm::sincos(theta - phi, s, c);
  const double denom = (1.0 + r * r) - (2.0 * r) * c;
  const double m = (2.0 * r) / denom;
  return {-m, m * s};
}

// Kahan-compensated state update: the increment plus the carried correction
// is added to the state; the rounding of that add is re-captured.
inline void accumulate(double& state, double& comp, double increment) {
  const double y = increment + comp;
  const double t = state + y;
  comp = (state - t) + y;
  state = t;
}

void radial_rk4_step(std::size_t n, double* rho, double* rho_c, double* phi,
                     double* phi_c, const double* theta0,
                     const double* theta_mid, const double* theta1,
                     const double* dt) {
  for (std::size_t i = 0; i < n; ++i) {
    const double h = dt[i];
    const double h2 = 0.5 * h;
    const Rates k1 = radial_rhs(rho[i], phi[i], theta0[i]);
    const Rates k2 = radial_rhs(rho[i] + h2 * k1.drho, phi[i] + h2 * k1.dphi,
                                theta_mid[i]);
    const Rates k3 = radial_rhs(rho[i] + h2 * k2.drho, phi[i] + h2 * k2.dphi,
                                theta_mid[i]);
    const Rates k4 =
        radial_rhs(rho[i] + h * k3.drho, phi[i] + h * k3.dphi, theta1[i]);
    const double h6 = h / 6.0;
    accumulate(rho[i], rho_c[i],
               h6 * ((k1.drho + k4.drho) + 2.0 * (k2.drho + k3.drho)));
    accumulate(phi[i], phi_c[i],
               h6 * ((k1.dphi + k4.dphi) + 2.0 * (k2.dphi + k3.dphi)));
  }
}

// Chordal right-hand side:
//   dx = 2 (u - x) / ((u - x)^2 + y^2),  dy = 2 y / ((u - x)^2 + y^2)
inline Rates chordal_rhs(double x, double y, double u) {
  const double dx = u - x;
  const double denom = dx * dx + y * y;
  const double m = 2.0 / denom;
  return {m * dx, m * y};
}

void chordal_rk4_step(std::size_t n, double* x, double* x_c, double* y,
                      double* y_c, const double* u0, const double* u_mid,
                      const double* u1, const double* dt) {
  for (std::size_t i = 0; i < n; ++i) {
    const double h = dt[i];
    const double h2 = 0.5 * h;
    const Rates k1 = chordal_rhs(x[i], y[i], u0[i]);
    const Rates k2 =
        chordal_rhs(x[i] + h2 * k1.drho, y[i] + h2 * k1.dphi, u_mid[i]);
    const Rates k3 =
        chordal_rhs(x[i] + h2 * k2.drho, y[i] + h2 * k2.dphi, u_mid[i]);
    const Rates k4 =
        chordal_rhs(x[i] + h * k3.drho, y[i] + h * k3.dphi, u1[i]);
    const double h6 = h / 6.0;
    accumulate(x[i], x_c[i],
               h6 * ((k1.drho + k4.drho) + 2.0 * (k2.drho + k3.drho)));
    accumulate(y[i], y_c[i],
               h6 * ((k1.dphi + k4.dphi) + 2.0 * (k2.dphi + k3.dphi)));
  }
}

void region_residual(std::size_t n, const double* rho, const double* phi,
                     double rho0, double phi0, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = (rho[i] - rho0) + std::fabs(phi[i] - phi0);
  }
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{"scalar", &radial_rk4_step, &chordal_rk4_step,
                         &region_residual};
  return k;
}

}  // namespace loewner::kernels
