// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pne/data.hpp"
#include "pne/fields.hpp"

namespace pne {

/// Christoffel symbols of the second kind at one node, Gamma^k_{ij} packed
/// symmetric in (i,j).
struct Christoffel {
  int d = 0;
  std::array<std::array<double, 10>, 4> G{};  // [k][sym_index(i,j)]

  double at(int k, int i, int j) const { return G[k][sym_index(i, j, d)]; }
};

/// Metric value, inverse and determinant at one node.
struct MetricAt {
  int d = 0;
  double m[10];
  double inv[10];
  double det = 0.0;

  double lower(int i, int j) const { return m[sym_index(i, j, d)]; }
  double upper(int i, int j) const { return inv[sym_index(i, j, d)]; }
};

// ---- metric-level operations (work for any dimension 2..4, including
// intrinsic surface metrics on periodic grids) ----

MetricAt metric_at(const SymTensorField& g, std::int64_t k);

/// Gamma^k_{ij} from centered second-order differences of g (one-sided at
/// non-periodic chart edges).
Christoffel christoffel_at(const SymTensorField& g, std::int64_t k);

/// Ricci tensor at a node, from differenced Christoffel symbols.
void ricci_at(const SymTensorField& g, std::int64_t k, double* ricci_packed);

double scalar_curvature_at(const SymTensorField& g, std::int64_t k);

ScalarField intrinsic_scalar_curvature(const SymTensorField& g);
SymTensorField intrinsic_ricci(const SymTensorField& g);

// ---- initial-data-level operations ----

/// Gamma at a node of the data metric. Errors on a degenerate metric.
Christoffel christoffel(const InitialDataSet& data, std::int64_t k);

/// Scalar curvature R_g of the data metric.
ScalarField scalar_curvature(const InitialDataSet& data);

/// tr_g p at every node.
ScalarField trace_p(const InitialDataSet& data);

/// Energy density. Standard convention mu = (R - |p|^2 + (tr p)^2)/2;
/// the literal convention R/2 - |p|^2 + (tr p)^2 sits behind the data set's
/// mu_convention flag.
ScalarField energy_density(const InitialDataSet& data);

/// Momentum density J = div_g p - d(tr_g p), covariant divergence.
CovectorField momentum_density(const InitialDataSet& data);

/// Pointwise margin of the modified dominant energy condition:
///   mu - |J| + ( (n/(n-1)) h^2 - 2 h tr_g p - 2 |Dh| ) / 2.
/// The data satisfies the condition iff the field is >= 0 everywhere.
ScalarField modified_dec_margin(const InitialDataSet& data);

/// Coordinate gradient (covector) of a scalar field.
CovectorField gradient(const ScalarField& f);

}  // namespace pne
