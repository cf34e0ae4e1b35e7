// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pne/errors.hpp"

namespace pne {

/// Chart topologies exposed through the JSON interface. Generic charts can
/// only be built programmatically (tests use them for reduced-dimension
/// sections).
enum class Topology { PeriodicBox, LatLongSphereShell, RadialInterval, Generic };

struct Axis {
  double origin = 0.0;   // coordinate of node 0
  double spacing = 0.0;
  int count = 0;
  bool periodic = false;
  double wrap = 0.0;     // period length, periodic axes only

  double coord(int i) const { return origin + spacing * i; }
  double last() const { return origin + spacing * (count - 1); }
};

/// A structured grid chart: per-axis extents, node counts and spacing.
/// Node counts must be >= 5 per axis so 5-point stencils fit. Lat-long
/// shells exclude the poles by a half-cell offset in the polar angle and
/// require an even azimuthal count (the antipodal ghost map shifts phi by
/// half a period).
class Chart {
 public:
  Chart() = default;

  static Chart periodic_box(const std::vector<double>& extents,
                            const std::vector<int>& counts,
                            const std::vector<double>& mins = {});
  static Chart lat_long_shell(double r_min, double r_max, int nr, int ntheta, int nphi);
  static Chart radial_interval(double r_min, double r_max, int count);
  static Chart generic(std::vector<Axis> axes);

  int dim() const { return static_cast<int>(axes_.size()); }
  Topology topology() const { return topology_; }
  const Axis& axis(int a) const { return axes_[a]; }
  std::int64_t node_count() const;
  std::int64_t stride(int a) const;

  std::int64_t flat(const std::array<int, 4>& idx) const;
  std::array<int, 4> unflat(std::int64_t k) const;

  /// Chart coordinates of a node.
  std::array<double, 4> position(std::int64_t k) const;
  /// Cartesian embedding position (spherical -> cartesian on lat-long charts,
  /// identity otherwise). Used by closed-form samplers and radius fits.
  std::array<double, 4> cartesian(std::int64_t k) const;

  double min_spacing() const;
  double max_spacing() const;
  /// Diagonal of the coordinate bounding box; scales blow-up thresholds.
  double diameter() const;

  /// True if the node touches a non-periodic axis end within `width` cells.
  /// Half-offset axes (the polar angle) do not count as boundaries: the grid
  /// closes across the poles.
  bool near_boundary(std::int64_t k, int width) const;

  bool operator==(const Chart& o) const;

  std::string describe() const;

 private:
  Topology topology_ = Topology::Generic;
  std::vector<Axis> axes_;
  std::vector<bool> half_offset_;  // per axis

  friend class ChartAccess;
 public:
  bool half_offset(int a) const { return half_offset_[a]; }
};

/// One-dimensional derivative stencil (offsets in nodes along one axis).
struct Stencil {
  std::array<int, 4> off{};
  std::array<double, 4> w{};
  int n = 0;
};

/// Second-order first-derivative stencil: centered in the interior and on
/// periodic axes, one-sided at non-periodic chart edges.
Stencil stencil_d1(const Axis& ax, int i);
/// Second-order second-derivative stencil, same edge policy.
Stencil stencil_d2(const Axis& ax, int i);

/// Neighbor index along one axis with periodic wrap. Callers on non-periodic
/// axes must keep i+off within range (stencils guarantee this).
inline int wrap_index(const Axis& ax, int i) {
  if (!ax.periodic) return i;
  int r = i % ax.count;
  if (r < 0) r += ax.count;
  return r;
}

namespace fd {

/// First derivative of a sampled array along `axis` at node k.
double d1(const Chart& c, const std::vector<double>& v, std::int64_t k, int axis);
/// Second derivative along `axis`.
double d2(const Chart& c, const std::vector<double>& v, std::int64_t k, int axis);
/// Mixed second derivative (tensor product of two first-derivative stencils).
double d11(const Chart& c, const std::vector<double>& v, std::int64_t k, int a, int b);

}  // namespace fd

}  // namespace pne
