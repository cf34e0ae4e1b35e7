// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "pne/chart.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pne {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_count(int count) {
  if (count < 5) throw SchemaError("chart: node counts must be >= 5 per axis");
}
}  // namespace

Chart Chart::periodic_box(const std::vector<double>& extents,
                          const std::vector<int>& counts,
                          const std::vector<double>& mins) {
  if (extents.size() != counts.size() || extents.empty() || extents.size() > 4)
    throw SchemaError("periodic_box: extents/counts must match, dim in 1..4");
  Chart c;
  c.topology_ = Topology::PeriodicBox;
  for (std::size_t a = 0; a < extents.size(); ++a) {
    check_count(counts[a]);
    if (!(extents[a] > 0.0)) throw SchemaError("periodic_box: extents must be positive");
    Axis ax;
    ax.origin = mins.empty() ? 0.0 : mins[a];
    ax.count = counts[a];
    ax.periodic = true;
    ax.wrap = extents[a];
    ax.spacing = extents[a] / counts[a];
    c.axes_.push_back(ax);
    c.half_offset_.push_back(false);
  }
  return c;
}

Chart Chart::lat_long_shell(double r_min, double r_max, int nr, int ntheta, int nphi) {
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw SchemaError("lat_long_shell: need 0 < r_min < r_max");
  check_count(nr);
  check_count(ntheta);
  check_count(nphi);
  if (nphi % 2 != 0)
    throw SchemaError("lat_long_shell: azimuthal count must be even (antipodal ghost map)");
  Chart c;
  c.topology_ = Topology::LatLongSphereShell;
  Axis r;
  r.origin = r_min;
  r.count = nr;
  r.spacing = (r_max - r_min) / (nr - 1);
  c.axes_.push_back(r);
  c.half_offset_.push_back(false);
  Axis th;
  th.count = ntheta;
  th.spacing = kPi / ntheta;
  th.origin = 0.5 * th.spacing;  // poles excluded by the half-cell offset
  c.axes_.push_back(th);
  c.half_offset_.push_back(true);
  Axis ph;
  ph.count = nphi;
  ph.periodic = true;
  ph.wrap = 2.0 * kPi;
  ph.spacing = ph.wrap / nphi;
  c.axes_.push_back(ph);
  c.half_offset_.push_back(false);
  return c;
}

Chart Chart::radial_interval(double r_min, double r_max, int count) {
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw SchemaError("radial_interval: need 0 < r_min < r_max");
  check_count(count);
  Chart c;
  c.topology_ = Topology::RadialInterval;
  Axis ax;
  ax.origin = r_min;
  ax.count = count;
  ax.spacing = (r_max - r_min) / (count - 1);
  c.axes_.push_back(ax);
  c.half_offset_.push_back(false);
  return c;
}

Chart Chart::generic(std::vector<Axis> axes) {
  if (axes.empty() || axes.size() > 4) throw SchemaError("generic chart: dim in 1..4");
  Chart c;
  c.topology_ = Topology::Generic;
  for (const Axis& ax : axes) check_count(ax.count);
  c.axes_ = std::move(axes);
  c.half_offset_.assign(c.axes_.size(), false);
  return c;
}

std::int64_t Chart::node_count() const {
  std::int64_t n = 1;
  for (const Axis& ax : axes_) n *= ax.count;
  return n;
}

std::int64_t Chart::stride(int a) const {
  std::int64_t s = 1;
  for (int i = 0; i < a; ++i) s *= axes_[i].count;
  return s;
}

std::int64_t Chart::flat(const std::array<int, 4>& idx) const {
  std::int64_t k = 0;
  std::int64_t s = 1;
  for (int a = 0; a < dim(); ++a) {
    k += static_cast<std::int64_t>(idx[a]) * s;
    s *= axes_[a].count;
  }
  return k;
}

std::array<int, 4> Chart::unflat(std::int64_t k) const {
  std::array<int, 4> idx{};
  for (int a = 0; a < dim(); ++a) {
    idx[a] = static_cast<int>(k % axes_[a].count);
    k /= axes_[a].count;
  }
  return idx;
}

std::array<double, 4> Chart::position(std::int64_t k) const {
  const auto idx = unflat(k);
  std::array<double, 4> x{};
  for (int a = 0; a < dim(); ++a) x[a] = axes_[a].coord(idx[a]);
  return x;
}

std::array<double, 4> Chart::cartesian(std::int64_t k) const {
  const auto x = position(k);
  if (topology_ != Topology::LatLongSphereShell) return x;
  const double r = x[0], th = x[1], ph = x[2];
  return {r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph),
          r * std::cos(th), 0.0};
}

double Chart::min_spacing() const {
  double s = axes_[0].spacing;
  for (const Axis& ax : axes_) s = std::min(s, ax.spacing);
  return s;
}

double Chart::max_spacing() const {
  double s = axes_[0].spacing;
  for (const Axis& ax : axes_) s = std::max(s, ax.spacing);
  return s;
}

double Chart::diameter() const {
  double sum = 0.0;
  for (const Axis& ax : axes_) {
    const double span = ax.periodic ? ax.wrap : ax.spacing * (ax.count - 1);
    sum += span * span;
  }
  return std::sqrt(sum);
}

bool Chart::near_boundary(std::int64_t k, int width) const {
  const auto idx = unflat(k);
  for (int a = 0; a < dim(); ++a) {
    if (axes_[a].periodic || half_offset_[a]) continue;
    if (idx[a] < width || idx[a] >= axes_[a].count - width) return true;
  }
  return false;
}

bool Chart::operator==(const Chart& o) const {
  if (topology_ != o.topology_ || axes_.size() != o.axes_.size()) return false;
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    const Axis& x = axes_[a];
    const Axis& y = o.axes_[a];
    if (x.count != y.count || x.periodic != y.periodic) return false;
    if (x.origin != y.origin || x.spacing != y.spacing || x.wrap != y.wrap) return false;
  }
  return true;
}

std::string Chart::describe() const {
  std::ostringstream os;
  switch (topology_) {
    case Topology::PeriodicBox: os << "periodic-box"; break;
    case Topology::LatLongSphereShell: os << "lat-long-sphere-shell"; break;
    case Topology::RadialInterval: os << "radial-interval"; break;
    case Topology::Generic: os << "generic"; break;
  }
  os << " [";
  for (int a = 0; a < dim(); ++a) os << (a ? "," : "") << axes_[a].count;
  os << "]";
  return os.str();
}

Stencil stencil_d1(const Axis& ax, int i) {
  Stencil s;
  const double h = ax.spacing;
  if (ax.periodic || (i > 0 && i < ax.count - 1)) {
    s.n = 2;
    s.off = {-1, 1, 0, 0};
    s.w = {-0.5 / h, 0.5 / h, 0.0, 0.0};
  } else if (i == 0) {
    s.n = 3;
    s.off = {0, 1, 2, 0};
    s.w = {-1.5 / h, 2.0 / h, -0.5 / h, 0.0};
  } else {
    s.n = 3;
    s.off = {0, -1, -2, 0};
    s.w = {1.5 / h, -2.0 / h, 0.5 / h, 0.0};
  }
  return s;
}

Stencil stencil_d2(const Axis& ax, int i) {
  Stencil s;
  const double h2 = ax.spacing * ax.spacing;
  if (ax.periodic || (i > 0 && i < ax.count - 1)) {
    s.n = 3;
    s.off = {-1, 0, 1, 0};
    s.w = {1.0 / h2, -2.0 / h2, 1.0 / h2, 0.0};
  } else if (i == 0) {
    s.n = 4;
    s.off = {0, 1, 2, 3};
    s.w = {2.0 / h2, -5.0 / h2, 4.0 / h2, -1.0 / h2};
  } else {
    s.n = 4;
    s.off = {0, -1, -2, -3};
    s.w = {2.0 / h2, -5.0 / h2, 4.0 / h2, -1.0 / h2};
  }
  return s;
}

namespace fd {

double d1(const Chart& c, const std::vector<double>& v, std::int64_t k, int axis) {
  const auto idx = c.unflat(k);
  const Axis& ax = c.axis(axis);
  const Stencil s = stencil_d1(ax, idx[axis]);
  const std::int64_t str = c.stride(axis);
  double acc = 0.0;
  for (int t = 0; t < s.n; ++t) {
    const int j = wrap_index(ax, idx[axis] + s.off[t]);
    acc += s.w[t] * v[k + (j - idx[axis]) * str];
  }
  return acc;
}

double d2(const Chart& c, const std::vector<double>& v, std::int64_t k, int axis) {
  const auto idx = c.unflat(k);
  const Axis& ax = c.axis(axis);
  const Stencil s = stencil_d2(ax, idx[axis]);
  const std::int64_t str = c.stride(axis);
  double acc = 0.0;
  for (int t = 0; t < s.n; ++t) {
    const int j = wrap_index(ax, idx[axis] + s.off[t]);
    acc += s.w[t] * v[k + (j - idx[axis]) * str];
  }
  return acc;
}

double d11(const Chart& c, const std::vector<double>& v, std::int64_t k, int a, int b) {
  const auto idx = c.unflat(k);
  const Axis& axa = c.axis(a);
  const Axis& axb = c.axis(b);
  const Stencil sa = stencil_d1(axa, idx[a]);
  const Stencil sb = stencil_d1(axb, idx[b]);
  const std::int64_t stra = c.stride(a);
  const std::int64_t strb = c.stride(b);
  double acc = 0.0;
  for (int ta = 0; ta < sa.n; ++ta) {
    const int ja = wrap_index(axa, idx[a] + sa.off[ta]);
    for (int tb = 0; tb < sb.n; ++tb) {
      const int jb = wrap_index(axb, idx[b] + sb.off[tb]);
      acc += sa.w[ta] * sb.w[tb] *
             v[k + (ja - idx[a]) * stra + (jb - idx[b]) * strb];
    }
  }
  return acc;
}

}  // namespace fd

}  // namespace pne
