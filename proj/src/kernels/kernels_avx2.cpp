// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0

// AVX2+FMA kernels, four lanes per register. Each function mirrors the
// expression tree of kernels_scalar.cpp operation for operation (the
// polynomial evaluations use the shared coefficients of vmath_coeffs.hpp),
// so the lanes are bit-identical with the scalar reference. Remainder lanes
// fall through to the scalar kernel.

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "loewner/kernels/kernels.hpp"
#include "loewner/kernels/vmath_coeffs.hpp"

namespace loewner::kernels {

namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline __m256d v_round_magic(__m256d x) {
  const __m256d magic = _mm256_set1_pd(vm::kRoundMagic);
  return _mm256_sub_pd(_mm256_add_pd(x, magic), magic);
}

inline __m256d v_exp(__m256d x) {
  x = _mm256_min_pd(_mm256_max_pd(x, _mm256_set1_pd(vm::kExpMin)),
                    _mm256_set1_pd(vm::kExpMax));
  const __m256d k = v_round_magic(_mm256_mul_pd(x, _mm256_set1_pd(vm::kLog2E)));
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(vm::kLn2Hi), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(vm::kLn2Lo), r);

  __m256d q = _mm256_set1_pd(vm::kExpC[11]);
  for (int j = 10; j >= 0; --j) {
    q = _mm256_fmadd_pd(q, r, _mm256_set1_pd(vm::kExpC[j]));
  }
  const __m256d p = _mm256_add_pd(_mm256_fmadd_pd(q, _mm256_mul_pd(r, r), r),
                                  _mm256_set1_pd(1.0));

  const __m128i ki32 = _mm256_cvtpd_epi32(k);
  const __m256i ki = _mm256_cvtepi32_epi64(ki32);
  const __m256i bits = _mm256_slli_epi64(
      _mm256_add_epi64(ki, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

inline void v_sincos(__m256d x, __m256d& s, __m256d& c) {
  const __m256d q =
      v_round_magic(_mm256_mul_pd(x, _mm256_set1_pd(vm::kTwoOverPi)));
  __m256d r = _mm256_fnmadd_pd(q, _mm256_set1_pd(vm::kPio2_1), x);
  r = _mm256_fnmadd_pd(q, _mm256_set1_pd(vm::kPio2_2), r);
  r = _mm256_fnmadd_pd(q, _mm256_set1_pd(vm::kPio2_3), r);
  const __m256d z = _mm256_mul_pd(r, r);

  __m256d ps = _mm256_set1_pd(vm::kSinC[5]);
  for (int j = 4; j >= 1; --j) {
    ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(vm::kSinC[j]));
  }
  const __m256d sin_r = _mm256_fmadd_pd(
      _mm256_mul_pd(r, z), _mm256_fmadd_pd(z, ps, _mm256_set1_pd(vm::kSinC[0])),
      r);

  __m256d pc = _mm256_set1_pd(vm::kCosC[5]);
  for (int j = 4; j >= 0; --j) {
    pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(vm::kCosC[j]));
  }
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d hz = _mm256_mul_pd(_mm256_set1_pd(0.5), z);
  const __m256d w = _mm256_sub_pd(one, hz);
  const __m256d cos_r = _mm256_add_pd(
      w, _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(one, w), hz),
                       _mm256_mul_pd(_mm256_mul_pd(z, z), pc)));

  const __m256i n = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(q));
  const __m256i one_i = _mm256_set1_epi64x(1);
  const __m256i two_i = _mm256_set1_epi64x(2);
  const __m256d swap_mask = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(n, one_i), one_i));
  const __m256d sflip = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(n, two_i), two_i));
  const __m256d cflip = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(_mm256_add_epi64(n, one_i), two_i), two_i));

  const __m256d s_base = _mm256_blendv_pd(sin_r, cos_r, swap_mask);
  const __m256d c_base = _mm256_blendv_pd(cos_r, sin_r, swap_mask);
  s = _mm256_xor_pd(s_base, _mm256_and_pd(sflip, kSignMask));
  c = _mm256_xor_pd(c_base, _mm256_and_pd(cflip, kSignMask));
}

inline __m256d v_tanh_half(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d e = v_exp(_mm256_xor_pd(x, kSignMask));
  return _mm256_div_pd(_mm256_sub_pd(one, e), _mm256_add_pd(one, e));
}

struct VRates {
  __m256d drho;
  __m256d dphi;
};

inline VRates v_radial_rhs(__m256d rho, __m256d phi, __m256d theta) {
  const __m256d r = v_tanh_half(rho);
  __m256d s, c;
  v_sincos(_mm256_sub_pd(theta, phi), s, c);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d t2r = _mm256_mul_pd(_mm256_set1_pd(2.0), r);
  const __m256d denom = _mm256_sub_pd(_mm256_add_pd(one, _mm256_mul_pd(r, r)),
                                      _mm256_mul_pd(t2r, c));
  const __m256d m = _mm256_div_pd(t2r, denom);
  return {_mm256_xor_pd(m, kSignMask), _mm256_mul_pd(m, s)};
}

inline VRates v_chordal_rhs(__m256d x, __m256d y, __m256d u) {
  const __m256d dx = _mm256_sub_pd(u, x);
  const __m256d denom =
      _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(y, y));
  const __m256d m = _mm256_div_pd(_mm256_set1_pd(2.0), denom);
  return {_mm256_mul_pd(m, dx), _mm256_mul_pd(m, y)};
}

// Mirrors the scalar Kahan-compensated state update.
inline void v_accumulate(double* state, double* comp, std::size_t i,
                         __m256d increment) {
  const __m256d s = _mm256_loadu_pd(state + i);
  const __m256d cc = _mm256_loadu_pd(comp + i);
  const __m256d y = _mm256_add_pd(increment, cc);
  const __m256d t = _mm256_add_pd(s, y);
  _mm256_storeu_pd(comp + i, _mm256_add_pd(_mm256_sub_pd(s, t), y));
  _mm256_storeu_pd(state + i, t);
}

template <VRates (*Rhs)(__m256d, __m256d, __m256d)>
inline void v_rk4_step(double* a, double* a_c, double* b, double* b_c,
                       const double* g0, const double* g_mid,
                       const double* g1, const double* dt, std::size_t i) {
  const __m256d va = _mm256_loadu_pd(a + i);
  const __m256d vb = _mm256_loadu_pd(b + i);
  const __m256d h = _mm256_loadu_pd(dt + i);
  const __m256d h2 = _mm256_mul_pd(_mm256_set1_pd(0.5), h);
  const __m256d vg0 = _mm256_loadu_pd(g0 + i);
  const __m256d vgm = _mm256_loadu_pd(g_mid + i);
  const __m256d vg1 = _mm256_loadu_pd(g1 + i);

  const VRates k1 = Rhs(va, vb, vg0);
  const VRates k2 = Rhs(_mm256_add_pd(va, _mm256_mul_pd(h2, k1.drho)),
                        _mm256_add_pd(vb, _mm256_mul_pd(h2, k1.dphi)), vgm);
  const VRates k3 = Rhs(_mm256_add_pd(va, _mm256_mul_pd(h2, k2.drho)),
                        _mm256_add_pd(vb, _mm256_mul_pd(h2, k2.dphi)), vgm);
  const VRates k4 = Rhs(_mm256_add_pd(va, _mm256_mul_pd(h, k3.drho)),
                        _mm256_add_pd(vb, _mm256_mul_pd(h, k3.dphi)), vg1);

  const __m256d h6 = _mm256_div_pd(h, _mm256_set1_pd(6.0));
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d sum_a = _mm256_add_pd(
      _mm256_add_pd(k1.drho, k4.drho),
      _mm256_mul_pd(two, _mm256_add_pd(k2.drho, k3.drho)));
  const __m256d sum_b = _mm256_add_pd(
      _mm256_add_pd(k1.dphi, k4.dphi),
      _mm256_mul_pd(two, _mm256_add_pd(k2.dphi, k3.dphi)));
  v_accumulate(a, a_c, i, _mm256_mul_pd(h6, sum_a));
  v_accumulate(b, b_c, i, _mm256_mul_pd(h6, sum_b));
}

void radial_rk4_step(std::size_t n, double* rho, double* rho_c, double* phi,
                     double* phi_c, const double* theta0,
                     const double* theta_mid, const double* theta1,
                     const double* dt) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    v_rk4_step<v_radial_rhs>(rho, rho_c, phi, phi_c, theta0, theta_mid,
                             theta1, dt, i);
  }
  if (i < n) {
    scalar().radial_rk4_step(n - i, rho + i, rho_c + i, phi + i, phi_c + i,
                             theta0 + i, theta_mid + i, theta1 + i, dt + i);
  }
}

void chordal_rk4_step(std::size_t n, double* x, double* x_c, double* y,
                      double* y_c, const double* u0, const double* u_mid,
                      const double* u1, const double* dt) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    v_rk4_step<v_chordal_rhs>(x, x_c, y, y_c, u0, u_mid, u1, dt, i);
  }
  if (i < n) {
    scalar().chordal_rk4_step(n - i, x + i, x_c + i, y + i, y_c + i, u0 + i,
                              u_mid + i, u1 + i, dt + i);
  }
}

void region_residual(std::size_t n, const double* rho, const double* phi,
                     double rho0, double phi0, double* out) {
  const __m256d vrho0 = _mm256_set1_pd(rho0);
  const __m256d vphi0 = _mm256_set1_pd(phi0);
  const __m256d abs_mask = _mm256_castsi256_pd(
      _mm256_set1_epi64x(0x7fffffffffffffffLL));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vr = _mm256_loadu_pd(rho + i);
    const __m256d vp = _mm256_loadu_pd(phi + i);
    const __m256d res = _mm256_add_pd(
        _mm256_sub_pd(vr, vrho0),
        _mm256_and_pd(_mm256_sub_pd(vp, vphi0), abs_mask));
    _mm256_storeu_pd(out + i, res);
  }
  if (i < n) {
    scalar().region_residual(n - i, rho + i, phi + i, rho0, phi0, out + i);
  }
}

}  // namespace

const Kernels& avx2() {
  static const Kernels k{"avx2", &radial_rk4_step, &chordal_rk4_step,
                         &region_residual};
  return k;
}

}  // namespace loewner::kernels
