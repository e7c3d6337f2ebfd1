// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include "loewner/kernels/vmath.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "loewner/kernels/vmath_coeffs.hpp"

namespace loewner::kernels::vm {

namespace {

// Round to nearest integer (ties to even), returned as a double.
inline double round_magic(double x) { return (x + kRoundMagic) - kRoundMagic; }

}  // namespace

double exp(double x) {
  x = x < kExpMin ? kExpMin : (x > kExpMax ? kExpMax : x);
  const double k = round_magic(x * kLog2E);
  double r = std::fma(k, -kLn2Hi, x);
  r = std::fma(k, -kLn2Lo, r);

  double q = kExpC[11];
  for (int j = 10; j >= 0; --j) q = std::fma(q, r, kExpC[j]);
  const double p = std::fma(q, r * r, r) + 1.0;

  const auto ki = static_cast<std::int64_t>(k);
  const double scale =
      std::bit_cast<double>(static_cast<std::uint64_t>(ki + 1023) << 52);
  return p * scale;
}

void sincos(double x, double& s, double& c) {
  const double q = round_magic(x * kTwoOverPi);
  double r = std::fma(q, -kPio2_1, x);
  r = std::fma(q, -kPio2_2, r);
  r = std::fma(q, -kPio2_3, r);
  const double z = r * r;

  // sin(r) = r + r*z*(S0 + z*(S1 + ...))
  double ps = kSinC[5];
  for (int j = 4; j >= 1; --j) ps = std::fma(ps, z, kSinC[j]);
  const double sin_r = std::fma(r * z, std::fma(z, ps, kSinC[0]), r);

  // cos(r) = (1 - z/2) + ((1 - w) - z/2 + z^2*poly), fdlibm arrangement.
  double pc = kCosC[5];
  for (int j = 4; j >= 0; --j) pc = std::fma(pc, z, kCosC[j]);
  const double hz = 0.5 * z;
  const double w = 1.0 - hz;
  const double cos_r = w + (((1.0 - w) - hz) + z * z * pc);

  const auto n = static_cast<std::int64_t>(q) & 3;
  const bool swap = (n & 1) != 0;
  const double s_base = swap ? cos_r : sin_r;
  const double c_base = swap ? sin_r : cos_r;
  s = (n & 2) != 0 ? -s_base : s_base;
  c = ((n + 1) & 2) != 0 ? -c_base : c_base;
}

double tanh_half(double x) {
  const double e = exp(-x);
  return (1.0 - e) / (1.0 + e);
}

}  // namespace loewner::kernels::vm
