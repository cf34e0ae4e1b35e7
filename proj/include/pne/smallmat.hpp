// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>

#include "pne/dual.hpp"
#include "pne/errors.hpp"

namespace pne {

// Packed upper-triangle indexing for symmetric d x d tensors, d <= 4.
// Components are stored in the order (0,0),(0,1),...,(0,d-1),(1,1),...
inline constexpr int sym_size(int d) { return d * (d + 1) / 2; }

inline constexpr int sym_index(int i, int j, int d) {
  if (i > j) { const int t = i; i = j; j = t; }
  return i * d - i * (i - 1) / 2 + (j - i);
}

/// Determinant of a packed symmetric matrix (d <= 4) by cofactor/elimination.
template <class T>
T sym_det(const T* m, int d) {
  // Expand to a full buffer and eliminate; pivots follow the diagonal, which
  // is safe for the positive definite metrics this is used on.
  T a[16];
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i * d + j] = m[sym_index(i, j, d)];
  T det = 1.0;
  for (int k = 0; k < d; ++k) {
    det = det * a[k * d + k];
    if (value(a[k * d + k]) == 0.0) return det * 0.0;
    for (int i = k + 1; i < d; ++i) {
      const T f = a[i * d + k] / a[k * d + k];
      for (int j = k; j < d; ++j) a[i * d + j] = a[i * d + j] - f * a[k * d + j];
    }
  }
  return det;
}

/// Inverse of a packed symmetric matrix; writes the packed inverse to out.
/// Gauss-Jordan with partial pivoting on the value part.
template <class T>
void sym_inverse(const T* m, T* out, int d) {
  T a[16];
  T inv[16];
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      a[i * d + j] = m[sym_index(i, j, d)];
      inv[i * d + j] = (i == j) ? T(1.0) : T(0.0);
    }
  for (int k = 0; k < d; ++k) {
    int piv = k;
    double best = std::fabs(value(a[k * d + k]));
    for (int i = k + 1; i < d; ++i) {
      const double cand = std::fabs(value(a[i * d + k]));
      if (cand > best) { best = cand; piv = i; }
    }
    if (best == 0.0) throw DegenerateMetricError("sym_inverse: singular matrix");
    if (piv != k) {
      for (int j = 0; j < d; ++j) {
        std::swap(a[k * d + j], a[piv * d + j]);
        std::swap(inv[k * d + j], inv[piv * d + j]);
      }
    }
    const T pivot = a[k * d + k];
    for (int j = 0; j < d; ++j) {
      a[k * d + j] = a[k * d + j] / pivot;
      inv[k * d + j] = inv[k * d + j] / pivot;
    }
    for (int i = 0; i < d; ++i) {
      if (i == k) continue;
      const T f = a[i * d + k];
      if (value(f) == 0.0 && f.n == 0) continue;
      for (int j = 0; j < d; ++j) {
        a[i * d + j] = a[i * d + j] - f * a[k * d + j];
        inv[i * d + j] = inv[i * d + j] - f * inv[k * d + j];
      }
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) out[sym_index(i, j, d)] = inv[i * d + j];
}

// double specialization avoids the Dual-only ".n" probe above.
template <>
inline void sym_inverse<double>(const double* m, double* out, int d) {
  double a[16];
  double inv[16];
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      a[i * d + j] = m[sym_index(i, j, d)];
      inv[i * d + j] = (i == j) ? 1.0 : 0.0;
    }
  for (int k = 0; k < d; ++k) {
    int piv = k;
    double best = std::fabs(a[k * d + k]);
    for (int i = k + 1; i < d; ++i) {
      const double cand = std::fabs(a[i * d + k]);
      if (cand > best) { best = cand; piv = i; }
    }
    if (best == 0.0) throw DegenerateMetricError("sym_inverse: singular matrix");
    if (piv != k) {
      for (int j = 0; j < d; ++j) {
        std::swap(a[k * d + j], a[piv * d + j]);
        std::swap(inv[k * d + j], inv[piv * d + j]);
      }
    }
    const double pivot = a[k * d + k];
    for (int j = 0; j < d; ++j) {
      a[k * d + j] /= pivot;
      inv[k * d + j] /= pivot;
    }
    for (int i = 0; i < d; ++i) {
      if (i == k) continue;
      const double f = a[i * d + k];
      if (f == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        a[i * d + j] -= f * a[k * d + j];
        inv[i * d + j] -= f * inv[k * d + j];
      }
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) out[sym_index(i, j, d)] = inv[i * d + j];
}

}  // namespace pne
