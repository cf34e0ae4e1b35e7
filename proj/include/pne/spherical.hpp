// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "json.hpp"

#include "pne/data.hpp"
#include "pne/errors.hpp"

namespace pne::spherical {

/// Symmetry-reduced initial data on a radial grid. The metric is
/// g = lambda(r) dr^2 + rho_tan(r)^2 dOmega^2 and p has radial/tangential
/// eigenvalue functions p_rad (the dr^2 coefficient) and p_tan (relative to
/// the tangential metric). Functions are kept as callables so root
/// refinement can evaluate between grid nodes.
struct SphericalData {
  int n = 3;
  double r_min = 1.0;
  double r_max = 2.0;
  int count = 10001;
  std::function<double(double)> lambda;
  std::function<double(double)> rho_tan;
  std::function<double(double)> rho_tan_prime;
  std::function<double(double)> p_rad;
  std::function<double(double)> p_tan;
  std::function<double(double)> h;

  std::vector<double> grid() const;
  void validate() const;

  static SphericalData minkowski(double r_min, double r_max, int count = 10001);
  static SphericalData schwarzschild(double r_min, double r_max, double mass,
                                     SchwarzschildGauge gauge, int pg_sign = +1,
                                     int count = 10001);
  static SphericalData constant_trace(double r_min, double r_max, double c,
                                      int count = 10001);
};

/// Mirror of the grid presets for the spherical oracle; accepts the same
/// data JSON as the fields module (spherically symmetric presets only).
SphericalData spherical_from_json(const nlohmann::json& data_json, int count = 10001);

/// theta(r) - h(r) sampled on the grid, with the continuous evaluator kept
/// for refinement. theta(r) = orientation (n-1) rho_tan'/(sqrt(lambda)
/// rho_tan) + (n-1) p_tan.
struct RadialProfile {
  int n = 3;
  int orientation = +1;
  std::vector<double> r;
  std::vector<double> value;
  std::function<double(double)> eval;
};

RadialProfile theta_profile(const SphericalData& data, int orientation);

struct PneRoot {
  double radius = 0.0;
  bool degenerate = false;  // |slope| at the root below 1e-6
};

/// All radii where theta - h crosses (or exactly hits) zero, refined by
/// bisection to |theta - h| < 1e-10 * scale, sorted ascending. No sign
/// change yields an empty list, not an error.
std::vector<PneRoot> find_pne_radii(const RadialProfile& profile);

struct RadialBC {
  enum class Kind { Dirichlet, ZeroSlope };
  Kind kind = Kind::Dirichlet;
  double inner = 0.0;
  double outer = 0.0;
};

struct RadialJangResult {
  std::vector<double> r;
  std::vector<double> u;
  double residual = 0.0;
  int iterations = 0;
  double tau = 0.0;
};

/// Nonconvergence with the best iterate attached.
class RadialJangNonconvergence : public NonconvergenceError {
 public:
  RadialJangNonconvergence(const std::string& what, RadialJangResult state)
      : NonconvergenceError(what), best(std::move(state)) {}
  RadialJangResult best;
};

/// Damped-Newton collocation solve of the radial reduction of the Jang
/// equation, second order, residual max-norm below tol on success.
RadialJangResult jang_ode_solve(const SphericalData& data, double tau,
                                const RadialBC& bc, double tol = 1e-9,
                                int max_iter = 60,
                                const std::vector<double>* warm_start = nullptr);

/// Recomputes the discrete residual with an independent assembly; used to
/// cross-check the Newton loop's own bookkeeping.
double jang_ode_residual_check(const SphericalData& data, double tau,
                               const RadialBC& bc, const std::vector<double>& u);

}  // namespace pne::spherical
