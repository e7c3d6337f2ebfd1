// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared constants for the kernel-local exp/sincos implementations. The
// scalar reference kernels and the SIMD kernels evaluate the exact same
// operation sequence over these values, so the two paths stay bit-identical.

namespace loewner::kernels::vm {

// Round-to-nearest-integer magic constant, valid for |x| < 2^51.
inline constexpr double kRoundMagic = 6755399441055744.0;  // 2^52 + 2^51

// exp: x = k*ln2 + r, e^x = 2^k * e^r with r in [-ln2/2, ln2/2].
inline constexpr double kLog2E = 1.4426950408889634;       // 0x1.71547652b82fep+0
inline constexpr double kLn2Hi = 0.6931471805599453;       // 0x1.62e42fefa39efp-1
inline constexpr double kLn2Lo = 2.3190468138462996e-17;   // 0x1.abc9e3b39803fp-56
inline constexpr double kExpMin = -708.0;
inline constexpr double kExpMax = 708.0;

// Taylor coefficients 1/j! for e^r, j = 2..13. Horner over these keeps the
// truncation term below 0.05 ulp on the reduced interval.
inline constexpr double kExpC[] = {
    1.0 / 2.0,
    1.0 / 6.0,
    1.0 / 24.0,
    1.0 / 120.0,
    1.0 / 720.0,
    1.0 / 5040.0,
    1.0 / 40320.0,
    1.0 / 362880.0,
    1.0 / 3628800.0,
    1.0 / 39916800.0,
    1.0 / 479001600.0,
    1.0 / 6227020800.0,
};

// sincos: x = q*(pi/2) + r, |r| <= pi/4, three-term Cody-Waite split of pi/2.
inline constexpr double kTwoOverPi = 0.6366197723675814;     // 0x1.45f306dc9c883p-1
inline constexpr double kPio2_1 = 1.5707963267948966;        // 0x1.921fb54442d18p+0
inline constexpr double kPio2_2 = 6.123233995736766e-17;     // 0x1.1a62633145c07p-54
inline constexpr double kPio2_3 = -1.4973849048591698e-33;   // -0x1.f1976b7ed8fbcp-110

// Minimax polynomials for sin/cos on [-pi/4, pi/4] (fdlibm kernels).
inline constexpr double kSinC[] = {
    -1.66666666666666324348e-01,
    8.33333333332248946124e-03,
    -1.98412698298579493134e-04,
    2.75573137070700676789e-06,
    -2.50507602534068634195e-08,
    1.58969099521155010221e-10,
};
inline constexpr double kCosC[] = {
    4.16666666666666019037e-02,
    -1.38888888888741095749e-03,
    2.48015872894767294178e-05,
    -2.75573143513906633035e-07,
    2.08757232129817482790e-09,
    -1.13596475577881948265e-11,
};

}  // namespace loewner::kernels::vm
