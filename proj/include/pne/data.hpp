// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "json.hpp"

#include "pne/fields.hpp"

namespace pne {

/// Which trace of p enters the h-coupled zeroth-order terms (stability
/// operator and the rigidity margin). Ambient means tr_g p, induced means
/// tr_Sigma p.
enum class TraceConvention { Ambient, Induced };

/// Parenthesization of the energy density. Standard is the constraint
/// convention mu = (R - |p|^2 + (tr p)^2)/2; Literal reads R/2 - |p|^2 +
/// (tr p)^2 as printed.
enum class MuConvention { Standard, Literal };

/// Schwarzschild slicing choices. The areal slice only exists for r > 2m and
/// its metric degenerates at the horizon, so horizon-crossing work uses the
/// isotropic (time-symmetric) or Painleve-Gullstrand (flat metric, p != 0)
/// forms, both regular across r = 2m.
enum class SchwarzschildGauge { Areal, Isotropic, PainleveGullstrand };

struct InitialDataSet {
  Chart chart;
  int n = 3;
  SymTensorField g;
  SymTensorField p;
  ScalarField h;
  TraceConvention trace_convention = TraceConvention::Ambient;
  MuConvention mu_convention = MuConvention::Standard;

  /// Checks positive definiteness of g at every node (leading principal
  /// minors > 0, det above the 1e-12 hard floor), finiteness of all
  /// components, and n == chart dimension.
  void validate() const;
};

/// Flat metric components in this chart's coordinates (identity on boxes,
/// diag(1, r^2, r^2 sin^2 theta) on lat-long shells).
SymTensorField flat_metric(const Chart& chart);

InitialDataSet make_minkowski(const Chart& chart);
InitialDataSet make_schwarzschild(const Chart& chart, double mass,
                                  SchwarzschildGauge gauge, int pg_sign = +1);
InitialDataSet make_constant_trace(const Chart& chart, double c);

/// Seeded conformally flat perturbation g = psi^4 * (flat), p = 0, with
/// psi = 1 + puncture_mass/(2|x|) + amplitude * P(x) and P a seeded
/// superharmonic quadratic polynomial. Superharmonicity keeps mu >= 0
/// exactly, so every seed satisfies the dominant energy condition; the
/// closed forms below serve as test oracles.
InitialDataSet make_polynomial_perturbation(const Chart& chart, std::uint64_t seed,
                                            double amplitude, double puncture_mass = 0.0);

/// Closed-form conformal factor of the polynomial-perturbation preset.
struct ConformalFactor {
  std::function<double(const std::array<double, 4>&)> psi;
  std::function<double(const std::array<double, 4>&)> laplacian_psi;  // flat Laplacian
};
ConformalFactor polynomial_perturbation_factor(std::uint64_t seed, double amplitude,
                                               double puncture_mass);

/// Chart/description parsing for the JSON front end. Throws SchemaError on
/// unknown keys or malformed values.
Chart chart_from_json(const nlohmann::json& j);
InitialDataSet data_from_json(const nlohmann::json& j);

/// Constant or sinusoidal prescription sampler shared by presets.
ScalarField h_from_json(const Chart& chart, const nlohmann::json& j);

}  // namespace pne
