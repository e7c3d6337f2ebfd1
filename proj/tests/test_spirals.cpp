// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "loewner/spirals.hpp"

using namespace loewner;

namespace {

double uniform(std::mt19937_64& eng, double lo, double hi) {
  const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

// Closed-form arc length: sinh(rho0), resp. sinh(rho0) - sinh(rho0 - pi).
double closed_form_length(double rho0) {
  return rho0 <= kPi ? std::sinh(rho0)
                     : std::sinh(rho0) - std::sinh(rho0 - kPi);
}

}  // namespace

TEST_CASE("hyp_spiral_point passes through z0 and the origin") {
  const DiskPoint z0(0.5, 0.4);
  const HypPolar p = to_polar(z0, 0.0);
  for (const Sign sign : {Sign::plus, Sign::minus}) {
    const DiskPoint at_anchor = hyp_spiral_point(z0, sign, p.phi);
    CHECK(std::fabs(at_anchor.re() - z0.re()) < 1e-15);
    CHECK(std::fabs(at_anchor.im() - z0.im()) < 1e-15);

    const double end_phi = p.phi - signum(sign) * p.rho;
    CHECK(hyp_spiral_point(z0, sign, end_phi).modulus() < 1e-15);
  }
}

TEST_CASE("hyp_spiral_point closed-form sample") {
  // z0 = 0.5: rho0 = log 3; at phi = 1 - log 3 the plus spiral sits at
  // hyperbolic radius 1, i.e. tanh(1/2) e^{i(1-log 3)}.
  const DiskPoint z = hyp_spiral_point(DiskPoint(0.5, 0.0), Sign::plus,
                                       1.0 - std::log(3.0));
  CHECK(std::fabs(z.re() - 0.45987207525737355) < 1e-15);
  CHECK(std::fabs(z.im() - -0.045496609022532124) < 1e-15);
}

TEST_CASE("hyp_spiral_point domain errors") {
  const DiskPoint z0(0.5, 0.0);
  const double rho0 = std::log(3.0);
  CHECK_THROWS_AS(hyp_spiral_point(z0, Sign::plus, -rho0 - 0.1),
                  std::domain_error);
  CHECK_THROWS_AS(hyp_spiral_point(z0, Sign::minus, rho0 + 0.1),
                  std::domain_error);
  CHECK_THROWS_AS(hyp_spiral_point(DiskPoint(), Sign::plus, 0.0),
                  std::domain_error);
}

TEST_CASE("euclid_spiral_point") {
  const std::complex<double> w0{0.3, 1.1};
  const double a0 = std::arg(w0);
  CHECK(std::abs(euclid_spiral_point(w0, Sign::plus, a0) - w0) < 1e-15);
  CHECK(std::abs(euclid_spiral_point(w0, Sign::plus, a0 - std::abs(w0))) <
        1e-15);

  // w0 = 1, minus branch at phi = -1: |w| = -(-1 - 0) + 1 = 2.
  const std::complex<double> w =
      euclid_spiral_point({1.0, 0.0}, Sign::minus, -1.0);
  CHECK(std::abs(w - 2.0 * std::polar(1.0, -1.0)) < 1e-15);

  CHECK_THROWS_AS(euclid_spiral_point({1.0, 0.0}, Sign::minus, 1.5),
                  std::domain_error);
  CHECK_THROWS_AS(euclid_spiral_point({0.0, 0.0}, Sign::plus, 0.0),
                  std::domain_error);
}

TEST_CASE("gamma_arc reaches the origin for rho0 <= pi") {
  const DiskPoint z0 = from_polar(kPi / 2.0, 0.3);
  for (const Sign sign : {Sign::plus, Sign::minus}) {
    const SpiralArc arc = gamma_arc(z0, sign);
    CHECK(arc.terminal.is_origin());
    CHECK(std::fabs((arc.phi_hi - arc.phi_lo) - kPi / 2.0) < 1e-12);
  }
}

TEST_CASE("gamma_arc stops short for rho0 > pi") {
  // rho0 = 2 atanh(0.99) = log(199) = 5.29330482472449240 > pi.
  const DiskPoint z0(0.99, 0.0);
  const SpiralArc plus = gamma_arc(z0, Sign::plus);
  CHECK(std::fabs(plus.rho0 - 5.2933048247244924) < 1e-12);
  CHECK_FALSE(plus.terminal.is_origin());
  CHECK(std::fabs(hyp_dist(DiskPoint(), plus.terminal) -
                  (plus.rho0 - kPi)) < 1e-12);
  CHECK(plus.terminal_phi() == -kPi);  // arg z1 = -pi + arg z0, lifted

  const SpiralArc minus = gamma_arc(z0, Sign::minus);
  CHECK(minus.terminal_phi() == kPi);
  // Both terminals are the same plane point.
  CHECK(std::abs(plus.terminal.value() - minus.terminal.value()) < 1e-14);
  // Both arcs wrap exactly one half turn.
  CHECK(std::fabs((plus.phi_hi - plus.phi_lo) - kPi) < 1e-15);
  CHECK(std::fabs((minus.phi_hi - minus.phi_lo) - kPi) < 1e-15);

  CHECK_THROWS_AS(gamma_arc(DiskPoint(), Sign::plus), std::domain_error);
}

TEST_CASE("arcs wrap a half turn for z0 = 0.7+0.65i") {
  const DiskPoint z0(0.7, 0.65);
  for (const Sign sign : {Sign::plus, Sign::minus}) {
    const SpiralArc arc = gamma_arc(z0, sign);
    CHECK(arc.rho0 > kPi);
    CHECK(std::fabs(arc.rho0 - 3.7771512386465607) < 1e-12);
    CHECK_FALSE(arc.terminal.is_origin());
    CHECK(std::fabs((arc.phi_hi - arc.phi_lo) - kPi) < 1e-15);
    CHECK(std::fabs(hyp_dist(DiskPoint(), arc.terminal) -
                    (arc.rho0 - kPi)) < 1e-12);
  }
}

TEST_CASE("terminal matches the spiral point at the terminal angle exactly") {
  std::mt19937_64 eng(31337);
  for (int k = 0; k < 50; ++k) {
    const DiskPoint z0 = from_polar(uniform(eng, 0.1, 6.0),
                                    uniform(eng, -kPi, kPi));
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const SpiralArc arc = gamma_arc(z0, sign);
      const DiskPoint p = hyp_spiral_point(z0, sign, arc.terminal_phi());
      CHECK(arc.terminal == p);
      CHECK(arc.terminal == arc.point_at(arc.terminal_phi()));
    }
  }
}

TEST_CASE("sampled arc points satisfy the defining equation") {
  std::mt19937_64 eng(2024);
  for (int k = 0; k < 20; ++k) {
    const DiskPoint z0 = from_polar(uniform(eng, 0.2, 5.5),
                                    uniform(eng, -kPi, kPi));
    for (const Sign sign : {Sign::plus, Sign::minus}) {
      const SpiralArc arc = gamma_arc(z0, sign);
      for (int j = 0; j <= 32; ++j) {
        const double phi =
            arc.phi_lo + (arc.phi_hi - arc.phi_lo) * j / 32.0;
        const DiskPoint p = arc.point_at(phi);
        if (p.is_origin()) continue;
        const double rho = to_polar(p, phi).rho;
        const double expected =
            signum(sign) * (phi - arc.phi0) + arc.rho0;
        CHECK(std::fabs(rho - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("plus and minus spirals are mirror images") {
  const DiskPoint z0 = from_polar(1.3, 0.7);
  const HypPolar p0 = to_polar(z0, 0.0);
  for (int j = 0; j <= 20; ++j) {
    const double delta = 3.0 * j / 20.0;
    const double rp = hyp_dist(
        DiskPoint(), hyp_spiral_point(z0, Sign::plus, p0.phi + delta));
    const double rm = hyp_dist(
        DiskPoint(), hyp_spiral_point(z0, Sign::minus, p0.phi - delta));
    CHECK(std::fabs(rp - rm) < 1e-12);
  }
}

TEST_CASE("hyperbolic speed equals cosh(rho) pointwise") {
  std::mt19937_64 eng(555);
  for (int k = 0; k < 10; ++k) {
    const DiskPoint z0 = from_polar(uniform(eng, 0.3, 5.0),
                                    uniform(eng, -kPi, kPi));
    const SpiralArc arc = gamma_arc(z0, k % 2 == 0 ? Sign::plus : Sign::minus);
    for (int j = 0; j <= 16; ++j) {
      const double phi = arc.phi_lo + (arc.phi_hi - arc.phi_lo) * j / 16.0;
      const double r = std::tanh(0.5 * arc.rho_at(phi));
      const double identity = (1.0 + r * r) / (1.0 - r * r);
      CHECK(std::fabs(identity - std::cosh(arc.rho_at(phi))) < 1e-10);
    }
  }
}

TEST_CASE("hyp_arc_length matches the closed forms") {
  // rho0 = pi: both closed-form branches agree at sinh(pi).
  {
    const SpiralArc arc = gamma_arc(from_polar(kPi, 1.0), Sign::plus);
    CHECK(std::fabs(hyp_arc_length(arc) - std::sinh(kPi)) < 1e-8);
    CHECK(std::fabs(std::sinh(kPi) - 11.548739357257748) < 1e-12);
  }
  // z0 = 0.5: rho0 = log 3 and sinh(log 3) = 4/3 exactly.
  {
    const SpiralArc arc = gamma_arc(DiskPoint(0.5, 0.0), Sign::minus);
    CHECK(std::fabs(hyp_arc_length(arc) - 4.0 / 3.0) < 1e-8);
    CHECK(std::fabs(std::sinh(std::log(3.0)) - 4.0 / 3.0) < 1e-15);
  }
  // rho0 = 4: sinh(4) - sinh(4 - pi) = 26.3221354856336061.
  {
    const SpiralArc arc = gamma_arc(from_polar(4.0, -0.8), Sign::plus);
    CHECK(std::fabs(hyp_arc_length(arc) - 26.322135485633606) < 1e-8);
  }
  // Shorter and longer arcs against the generic closed form.
  for (const double rho0 : {0.5, 1.0, 2.0, 3.5, 5.0}) {
    const SpiralArc arc = gamma_arc(from_polar(rho0, 0.25), Sign::plus);
    CHECK(std::fabs(hyp_arc_length(arc) - closed_form_length(rho0)) < 1e-8);
  }
}
