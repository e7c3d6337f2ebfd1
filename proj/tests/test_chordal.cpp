// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "loewner/chordal.hpp"

using namespace loewner;

namespace {

double uniform(std::mt19937_64& eng, double lo, double hi) {
  const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

RealDriver constant_driver(double u) {
  return RealDriver::piecewise(PiecewiseCurve({{0.0, u}}, Interp::constant));
}

}  // namespace

TEST_CASE("HalfPlanePoint requires y > 0") {
  CHECK_NOTHROW(HalfPlanePoint(3.0, 1e-9));
  CHECK_THROWS_AS(HalfPlanePoint(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(HalfPlanePoint(0.0, -1.0), std::domain_error);
}

TEST_CASE("U = 0 from i solves to i sqrt(4t + 1)") {
  const HalfPlanePoint z0(0.0, 1.0);
  const ChordalTrace trace =
      integrate_chordal(z0, constant_driver(0.0), 2.0, 1e-3);
  for (const ChordalSample& s : trace.samples) {
    CHECK(s.x == 0.0);  // symmetry is exact
    CHECK(std::fabs(s.y - std::sqrt(4.0 * s.t + 1.0)) < 1e-10);
  }
  CHECK(trace.samples.back().t == 2.0);
}

TEST_CASE("imaginary part grows strictly under any driver") {
  std::mt19937_64 eng(1618);
  const HalfPlanePoint z0(0.4, 0.7);
  for (int k = 0; k < 10; ++k) {
    std::vector<DriverKnot> knots;
    double t = 0.0;
    while (t < 1.5) {
      knots.push_back({t, uniform(eng, -3.0, 3.0)});
      t += uniform(eng, 0.05, 0.25);
    }
    const ChordalTrace trace = integrate_chordal(
        z0, RealDriver::piecewise(PiecewiseCurve(knots, Interp::constant)),
        1.5, 1e-3);
    for (std::size_t j = 1; j < trace.samples.size(); ++j) {
      CHECK(trace.samples[j].y > trace.samples[j - 1].y);
    }
    CHECK(trace.samples.back().y > z0.y());
  }
}

TEST_CASE("line control keeps the trajectory on the line") {
  const HalfPlanePoint z0(0.0, 1.0);
  const RealDriver driver = RealDriver::line(1.0, 0.0, 1.0);
  const ChordalTrace trace = integrate_chordal(z0, driver, 2.0, 1e-3);
  for (const ChordalSample& s : trace.samples) {
    CHECK(std::fabs(s.x - (s.y - 1.0)) < 1e-9);
  }
  // U(t) = 2 c y(t) + x0 - c y0 along the line; y(1.5) = 2 here.
  CHECK(std::fabs(driver.value(1.5) - (2.0 * 2.0 + 0.0 - 1.0)) < 1e-12);
}

TEST_CASE("line_driver closed forms") {
  const HalfPlanePoint z0(0.0, 1.0);
  {
    const auto [driver, t_hit] = line_driver(z0, HalfPlanePoint(0.0, 2.0));
    CHECK(driver.slope() == 0.0);
    CHECK(driver.value(0.123) == 0.0);
    CHECK(t_hit == 0.75);
  }
  {
    const auto [driver, t_hit] = line_driver(z0, HalfPlanePoint(1.0, 2.0));
    CHECK(driver.slope() == 1.0);
    CHECK(t_hit == 1.5);
    const ChordalTrace trace = integrate_chordal(z0, driver, t_hit, 1e-3);
    const ChordalSample& last = trace.samples.back();
    CHECK(last.t == 1.5);
    CHECK(std::hypot(last.x - 1.0, last.y - 2.0) < 1e-8);
  }
  CHECK_THROWS_AS(line_driver(z0, z0), std::domain_error);
  CHECK_THROWS_AS(line_driver(z0, HalfPlanePoint(1.0, 0.5)),
                  std::domain_error);
  CHECK_THROWS_AS(line_driver(z0, HalfPlanePoint(1.0, 1.0)),
                  std::domain_error);
}

TEST_CASE("halfplane_region_contains") {
  const HalfPlanePoint z0(0.0, 1.0);
  CHECK(halfplane_region_contains(z0, z0));
  CHECK(halfplane_region_contains(z0, HalfPlanePoint(5.0, 1.0001)));
  CHECK_FALSE(halfplane_region_contains(z0, HalfPlanePoint(0.0, 0.5)));
  CHECK_FALSE(halfplane_region_contains(z0, HalfPlanePoint(5.0, 1.0)));
}

TEST_CASE("Brownian scaling covariance of the line construction") {
  const HalfPlanePoint z0(0.3, 0.7);
  const double c = 1.2;
  const double T = 1.0;
  const double h = 1e-3;
  const ChordalTrace base =
      integrate_chordal(z0, RealDriver::line(c, z0.x(), z0.y()), T, h);
  const HalfPlanePoint z0s(2.0 * z0.x(), 2.0 * z0.y());
  const ChordalTrace scaled = integrate_chordal(
      z0s, RealDriver::line(c, z0s.x(), z0s.y()), 4.0 * T, 4.0 * h);
  REQUIRE(base.samples.size() == scaled.samples.size());
  for (std::size_t k = 0; k < base.samples.size(); ++k) {
    CHECK(std::fabs(scaled.samples[k].t - 4.0 * base.samples[k].t) < 1e-12);
    CHECK(std::fabs(scaled.samples[k].x - 2.0 * base.samples[k].x) < 1e-9);
    CHECK(std::fabs(scaled.samples[k].y - 2.0 * base.samples[k].y) < 1e-9);
  }
}

TEST_CASE("singularity guard") {
  // A driver sitting on top of a nearly degenerate starting point trips
  // the collision guard.
  const HalfPlanePoint z0(0.0, 1e-11);
  CHECK_THROWS_AS(integrate_chordal(z0, constant_driver(0.0), 1.0, 1e-3),
                  std::runtime_error);
}

TEST_CASE("integrate_chordal preconditions") {
  const HalfPlanePoint z0(0.0, 1.0);
  CHECK_THROWS_AS(integrate_chordal(z0, constant_driver(0.0), 0.0, 1e-3),
                  std::domain_error);
  CHECK_THROWS_AS(integrate_chordal(z0, constant_driver(0.0), 1.0, -1e-3),
                  std::domain_error);
}

TEST_CASE("piecewise knots are landed on exactly") {
  const RealDriver d = RealDriver::piecewise(PiecewiseCurve(
      {{0.0, 1.0}, {0.0007, -2.0}, {0.42, 0.5}}, Interp::linear));
  const ChordalTrace trace =
      integrate_chordal(HalfPlanePoint(0.0, 1.0), d, 1.0, 1e-3);
  for (const double knot : {0.0007, 0.42}) {
    bool found = false;
    for (const ChordalSample& s : trace.samples) found |= s.t == knot;
    CHECK_MESSAGE(found, "knot " << knot);
  }
}
