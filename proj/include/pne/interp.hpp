// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pne/chart.hpp"
#include "pne/dual.hpp"

namespace pne {

/// Cubic Lagrange interpolation stencil along one axis: four consecutive
/// nodes bracketing the target (clamped to the axis range for non-periodic
/// axes, wrapped for periodic ones). Interpolation error is O(h^4), so it
/// never limits the second-order truncation of the differenced fields.
struct InterpStencil {
  std::array<int, 4> node{};   // unwrapped node indices (may exceed range on periodic axes)
  double t0 = 0.0;             // coordinate of node[0]
  double h = 0.0;
};

InterpStencil interp_stencil(const Axis& ax, double x);

/// Evaluate the cubic Lagrange basis at x (templated so solver Jacobians can
/// differentiate through the evaluation point).
template <class T>
std::array<T, 4> interp_weights(const InterpStencil& s, const T& x) {
  std::array<T, 4> u;
  for (int i = 0; i < 4; ++i) u[i] = (x - (s.t0 + i * s.h)) / s.h;
  std::array<T, 4> w;
  // Lagrange basis on equispaced nodes 0,1,2,3 in units of h.
  w[0] = -(u[1] * u[2] * u[3]) / 6.0;
  w[1] = (u[0] * u[2] * u[3]) / 2.0;
  w[2] = -(u[0] * u[1] * u[3]) / 2.0;
  w[3] = (u[0] * u[1] * u[2]) / 6.0;
  return w;
}

/// d/dx of the basis, for analytic linearization of interpolated coefficients.
std::array<double, 4> interp_weights_deriv(const InterpStencil& s, double x);

class ScalarField;

/// Interpolate a sampled array along `axis` at coordinate x, all other
/// indices fixed by the flat node index `k0` (which must lie on the plane of
/// interest; its own index along `axis` is ignored).
template <class T>
T interp_axis(const Chart& c, const std::vector<double>& v, std::int64_t k0,
              int axis, const T& x) {
  const Axis& ax = c.axis(axis);
  const InterpStencil s = interp_stencil(ax, value(x));
  const auto w = interp_weights(s, x);
  const auto idx = c.unflat(k0);
  const std::int64_t str = c.stride(axis);
  const std::int64_t base = k0 - static_cast<std::int64_t>(idx[axis]) * str;
  T acc(0.0);
  for (int i = 0; i < 4; ++i) {
    const int j = wrap_index(ax, s.node[i]);
    acc = acc + w[i] * v[base + j * str];
  }
  return acc;
}

/// Value and d/dx of the interpolant (double path).
struct InterpVD {
  double v = 0.0;
  double dvdx = 0.0;
};
InterpVD interp_axis_vd(const Chart& c, const std::vector<double>& v, std::int64_t k0,
                        int axis, double x);

/// Full tensor-product cubic interpolation at an arbitrary chart point
/// (used by cross-chart comparison tests).
double interp_multicubic(const Chart& c, const std::vector<double>& v,
                         const std::array<double, 4>& x);

}  // namespace pne
