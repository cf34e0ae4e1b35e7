// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "json.hpp"

#include "pne/chart.hpp"

namespace pne {

/// Structured grid underlying a closed discrete surface: either the angular
/// grid of a lat-long sphere (polar axis half-offset, poles closed by the
/// antipodal ghost map (theta, phi) -> (-theta, phi + pi)) or a periodic
/// torus base. All stencils are centered; ghost values come from the
/// antipodal partner with a parity sign (+1 for scalars, -1 for polar vector
/// components).
class SurfaceGrid {
 public:
  enum class Kind { Sphere, Torus };

  SurfaceGrid() = default;
  static SurfaceGrid sphere(int ntheta, int nphi);
  static SurfaceGrid torus(std::vector<Axis> base_axes);

  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(axes_.size()); }
  const Axis& axis(int a) const { return axes_[a]; }
  std::int64_t node_count() const;
  std::int64_t flat(const std::array<int, 3>& idx) const;
  std::array<int, 3> unflat(std::int64_t k) const;
  double coord(int a, int i) const { return axes_[a].coord(i); }
  /// Product of spacings (uniform cell weight in coordinates).
  double cell_weight() const;

  /// Torus grids viewed as a periodic chart (for intrinsic curvature).
  Chart as_chart() const;

  struct Nb {
    std::int64_t k = 0;
    double sign = 1.0;
  };
  /// Resolve a stencil offset, applying wrap / antipodal reflection.
  Nb resolve(std::array<int, 3> idx, const std::array<int, 3>& off, int parity) const;

  // Centered second-order derivatives of node arrays; `parity` is the sign
  // the quantity picks up under the pole map (scalars +1).
  double d1(const std::vector<double>& v, std::int64_t k, int a, int parity = +1) const;
  double d2(const std::vector<double>& v, std::int64_t k, int a, int parity = +1) const;
  double d11(const std::vector<double>& v, std::int64_t k, int a, int b,
             int parity = +1) const;

  bool operator==(const SurfaceGrid& o) const;

 private:
  Kind kind_ = Kind::Torus;
  std::vector<Axis> axes_;
};

enum class SurfaceRep { RadialGraph, TorusGraph, RadialProfileShell };

/// A discrete hypersurface: a radial graph r = R(theta, phi) over a sphere,
/// a height graph over a flat torus, or a single-radius coordinate sphere.
struct Surface {
  SurfaceRep rep = SurfaceRep::RadialProfileShell;
  int orientation = +1;  // +1: normal toward increasing radius / height
  SurfaceGrid grid;      // unused for shells
  int height_axis = -1;  // torus graphs: ambient axis of the height dof
  std::vector<double> dof;

  static Surface radial_graph(int ntheta, int nphi, double radius, int orientation = +1);
  static Surface radial_graph(int ntheta, int nphi, std::vector<double> values,
                              int orientation = +1);
  static Surface torus_graph(const Chart& ambient_box, double height, int orientation = +1,
                             int height_axis = -1);
  static Surface shell(double radius, int orientation = +1);

  /// Shells expand to constant radial graphs on a given angular grid;
  /// radial graphs pass through unchanged.
  Surface as_radial_graph(int ntheta, int nphi) const;

  void validate() const;

  nlohmann::json to_json() const;
  static Surface from_json(const nlohmann::json& j);
};

}  // namespace pne
