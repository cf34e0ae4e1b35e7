// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>

namespace pne {

// Forward-mode scalar carrying up to N partial derivatives. Used to build
// solver Jacobians from the same code path as the residuals, so the two can
// never drift apart. The active partial count is runtime (n <= N).
template <int N>
struct Dual {
  double v = 0.0;
  int n = 0;
  std::array<double, N> d{};

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: implicit constant lift

  static Dual seed(double value, int slot, int count) {
    Dual x;
    x.v = value;
    x.n = count;
    x.d[slot] = 1.0;
    return x;
  }

  Dual operator-() const {
    Dual r;
    r.v = -v;
    r.n = n;
    for (int i = 0; i < n; ++i) r.d[i] = -d[i];
    return r;
  }
};

namespace detail {
template <int N>
inline int join(const Dual<N>& a, const Dual<N>& b) {
  return a.n > b.n ? a.n : b.n;
}
}  // namespace detail

template <int N>
inline Dual<N> operator+(const Dual<N>& a, const Dual<N>& b) {
  Dual<N> r;
  r.v = a.v + b.v;
  r.n = detail::join(a, b);
  for (int i = 0; i < r.n; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

template <int N>
inline Dual<N> operator-(const Dual<N>& a, const Dual<N>& b) {
  Dual<N> r;
  r.v = a.v - b.v;
  r.n = detail::join(a, b);
  for (int i = 0; i < r.n; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

template <int N>
inline Dual<N> operator*(const Dual<N>& a, const Dual<N>& b) {
  Dual<N> r;
  r.v = a.v * b.v;
  r.n = detail::join(a, b);
  for (int i = 0; i < r.n; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}

template <int N>
inline Dual<N> operator/(const Dual<N>& a, const Dual<N>& b) {
  Dual<N> r;
  const double inv = 1.0 / b.v;
  r.v = a.v * inv;
  r.n = detail::join(a, b);
  for (int i = 0; i < r.n; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) * inv;
  return r;
}

template <int N> inline Dual<N> operator+(const Dual<N>& a, double s) { return a + Dual<N>(s); }
template <int N> inline Dual<N> operator+(double s, const Dual<N>& a) { return Dual<N>(s) + a; }
template <int N> inline Dual<N> operator-(const Dual<N>& a, double s) { return a - Dual<N>(s); }
template <int N> inline Dual<N> operator-(double s, const Dual<N>& a) { return Dual<N>(s) - a; }
template <int N> inline Dual<N> operator*(const Dual<N>& a, double s) { return a * Dual<N>(s); }
template <int N> inline Dual<N> operator*(double s, const Dual<N>& a) { return Dual<N>(s) * a; }
template <int N> inline Dual<N> operator/(const Dual<N>& a, double s) { return a / Dual<N>(s); }
template <int N> inline Dual<N> operator/(double s, const Dual<N>& a) { return Dual<N>(s) / a; }

template <int N>
inline Dual<N> sqrt(const Dual<N>& a) {
  Dual<N> r;
  r.v = std::sqrt(a.v);
  r.n = a.n;
  const double scale = 0.5 / r.v;
  for (int i = 0; i < a.n; ++i) r.d[i] = scale * a.d[i];
  return r;
}

template <int N>
inline Dual<N> abs(const Dual<N>& a) {
  return a.v < 0.0 ? -a : a;
}

template <int N> inline bool operator<(const Dual<N>& a, const Dual<N>& b) { return a.v < b.v; }
template <int N> inline bool operator<(const Dual<N>& a, double b) { return a.v < b; }
template <int N> inline bool operator>(const Dual<N>& a, double b) { return a.v > b; }

/// value() lets templated geometry code extract a plain double from either
/// scalar type.
inline double value(double x) { return x; }
template <int N>
inline double value(const Dual<N>& x) { return x.v; }

using ::sqrt;  // make unqualified sqrt(double) resolve inside pne

}  // namespace pne
