// Copyright (c) 2026 the loewner-regions authors
// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "loewner/kernels/kernels.hpp"

namespace loewner::kernels {

bool avx2_available() {
#if defined(LOEWNER_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#if !defined(LOEWNER_HAVE_AVX2)
const Kernels& avx2() {
  throw std::logic_error("AVX2 kernels are not compiled in");
}
#endif

namespace {

std::atomic<const Kernels*> g_forced{nullptr};

const Kernels& env_default() {
  if (const char* env = std::getenv("LOEWNER_KERNELS")) {
    const std::string_view name(env);
    if (name == "scalar") return scalar();
    if (name == "avx2" && avx2_available()) return avx2();
    // Unknown or unavailable values fall through to auto.
  }
  return avx2_available() ? avx2() : scalar();
}

}  // namespace

const Kernels& active() {
  if (const Kernels* forced = g_forced.load(std::memory_order_relaxed)) {
    return *forced;
  }
  static const Kernels& chosen = env_default();
  return chosen;
}

void force_implementation(std::string_view name) {
  if (name == "auto") {
    g_forced.store(nullptr, std::memory_order_relaxed);
    return;
  }
  if (name == "scalar") {
    g_forced.store(&scalar(), std::memory_order_relaxed);
    return;
  }
  if (name == "avx2") {
    if (!avx2_available()) {
      throw std::invalid_argument("AVX2 kernels unavailable on this host");
    }
    g_forced.store(&avx2(), std::memory_order_relaxed);
    return;
  }
  throw std::invalid_argument("unknown kernel implementation: " +
                              std::string(name));
}

}  // namespace loewner::kernels
