// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace pne {

/// Deterministic uniform generator. Avoids std::uniform_real_distribution,
/// whose output is implementation-defined; the bit mapping below is fixed
/// by the standard-specified mt19937_64 stream, so seeded runs are
/// byte-reproducible across platforms.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  /// Uniform integer in [0, m).
  std::uint64_t index(std::uint64_t m) { return eng_() % m; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pne
