// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "pne/interp.hpp"

#include <cmath>

#include "pne/errors.hpp"

namespace pne {

InterpStencil interp_stencil(const Axis& ax, double x) {
  InterpStencil s;
  s.h = ax.spacing;
  double rel = (x - ax.origin) / ax.spacing;
  int base;
  if (ax.periodic) {
    base = static_cast<int>(std::floor(rel)) - 1;
  } else {
    const double lo = ax.origin;
    const double hi = ax.last();
    const double tol = 1e-9 * (std::fabs(hi - lo) + 1.0);
    if (x < lo - tol || x > hi + tol)
      throw OutOfChartError("interpolation target outside chart axis range");
    base = static_cast<int>(std::floor(rel)) - 1;
    if (base < 0) base = 0;
    if (base > ax.count - 4) base = ax.count - 4;
  }
  for (int i = 0; i < 4; ++i) s.node[i] = base + i;
  s.t0 = ax.origin + base * ax.spacing;
  return s;
}

std::array<double, 4> interp_weights_deriv(const InterpStencil& s, double x) {
  std::array<double, 4> u;
  for (int i = 0; i < 4; ++i) u[i] = (x - (s.t0 + i * s.h)) / s.h;
  const double ih = 1.0 / s.h;
  std::array<double, 4> dw;
  dw[0] = -(u[2] * u[3] + u[1] * u[3] + u[1] * u[2]) / 6.0 * ih;
  dw[1] = (u[2] * u[3] + u[0] * u[3] + u[0] * u[2]) / 2.0 * ih;
  dw[2] = -(u[1] * u[3] + u[0] * u[3] + u[0] * u[1]) / 2.0 * ih;
  dw[3] = (u[1] * u[2] + u[0] * u[2] + u[0] * u[1]) / 6.0 * ih;
  return dw;
}

InterpVD interp_axis_vd(const Chart& c, const std::vector<double>& v, std::int64_t k0,
                        int axis, double x) {
  const Axis& ax = c.axis(axis);
  const InterpStencil s = interp_stencil(ax, x);
  const auto w = interp_weights<double>(s, x);
  const auto dw = interp_weights_deriv(s, x);
  const auto idx = c.unflat(k0);
  const std::int64_t str = c.stride(axis);
  const std::int64_t base = k0 - static_cast<std::int64_t>(idx[axis]) * str;
  InterpVD out;
  for (int i = 0; i < 4; ++i) {
    const int j = wrap_index(ax, s.node[i]);
    const double val = v[base + j * str];
    out.v += w[i] * val;
    out.dvdx += dw[i] * val;
  }
  return out;
}

namespace {

double interp_rec(const Chart& c, const std::vector<double>& v, int axis,
                  std::array<int, 4>& idx, const std::array<double, 4>& x) {
  const Axis& ax = c.axis(axis);
  const InterpStencil s = interp_stencil(ax, x[axis]);
  const auto w = interp_weights<double>(s, x[axis]);
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    idx[axis] = wrap_index(ax, s.node[i]);
    double val;
    if (axis == 0) {
      val = v[c.flat(idx)];
    } else {
      val = interp_rec(c, v, axis - 1, idx, x);
    }
    acc += w[i] * val;
  }
  return acc;
}

}  // namespace

double interp_multicubic(const Chart& c, const std::vector<double>& v,
                         const std::array<double, 4>& x) {
  std::array<int, 4> idx{};
  return interp_rec(c, v, c.dim() - 1, idx, x);
}

}  // namespace pne
