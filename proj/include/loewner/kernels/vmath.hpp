// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Scalar reference implementations of the transcendentals used inside the
// batch kernels. Compiled in one translation unit with a pinned
// floating-point environment (-ffp-contract=off); the AVX2 kernels repeat
// the same operation sequence lane-wise, so scalar and SIMD integrations
// agree bit for bit.

namespace loewner::kernels::vm {

/// e^x for |x| <= 708. Accuracy ~1.5 ulp.
double exp(double x);

/// sin(x) and cos(x) for |x| up to ~1e6. Accuracy a few ulp.
void sincos(double x, double& s, double& c);

/// tanh(x/2) evaluated as (1 - e^{-x}) / (1 + e^{-x}).
double tanh_half(double x);

}  // namespace loewner::kernels::vm
