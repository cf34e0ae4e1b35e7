// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "pne/ambient.hpp"

#include <cmath>

namespace pne {

namespace {
constexpr double kDetFloor = 1e-12;
}

MetricAt metric_at(const SymTensorField& g, std::int64_t k) {
  MetricAt m;
  m.d = g.d;
  g.packed(k, m.m);
  m.det = sym_det(m.m, m.d);
  if (!(m.det > kDetFloor))
    throw DegenerateMetricError("metric determinant below floor at node " + std::to_string(k));
  sym_inverse(m.m, m.inv, m.d);
  return m;
}

Christoffel christoffel_at(const SymTensorField& g, std::int64_t k) {
  const int d = g.d;
  const Chart& chart = g.chart;
  const MetricAt m = metric_at(g, k);

  // dg[l][sym_index(i,j)] = d_l g_ij
  double dg[4][10];
  for (int l = 0; l < d; ++l)
    for (int c = 0; c < sym_size(d); ++c) dg[l][c] = fd::d1(chart, g.comp[c], k, l);

  Christoffel out;
  out.d = d;
  for (int kk = 0; kk < d; ++kk) {
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        double acc = 0.0;
        for (int l = 0; l < d; ++l) {
          const double term = dg[i][sym_index(l, j, d)] + dg[j][sym_index(l, i, d)] -
                              dg[l][sym_index(i, j, d)];
          acc += m.upper(kk, l) * term;
        }
        out.G[kk][sym_index(i, j, d)] = 0.5 * acc;
      }
    }
  }
  return out;
}

void ricci_at(const SymTensorField& g, std::int64_t k, double* ricci_packed) {
  const int d = g.d;
  const Chart& chart = g.chart;
  const auto idx = chart.unflat(k);

  // Gather Christoffels at every node any first-derivative stencil touches.
  // dG[a][kk][ij] = d_a Gamma^kk_{ij}
  double dG[4][4][10];
  for (int a = 0; a < d; ++a) {
    const Axis& ax = chart.axis(a);
    const Stencil s = stencil_d1(ax, idx[a]);
    const std::int64_t str = chart.stride(a);
    for (int kk = 0; kk < d; ++kk)
      for (int c = 0; c < sym_size(d); ++c) dG[a][kk][c] = 0.0;
    for (int t = 0; t < s.n; ++t) {
      const int j = wrap_index(ax, idx[a] + s.off[t]);
      const Christoffel G = christoffel_at(g, k + (j - idx[a]) * str);
      for (int kk = 0; kk < d; ++kk)
        for (int c = 0; c < sym_size(d); ++c) dG[a][kk][c] += s.w[t] * G.G[kk][c];
    }
  }
  const Christoffel G0 = christoffel_at(g, k);

  // R_jk = d_i Gamma^i_{jk} - d_j Gamma^i_{ik} + Gamma^i_{im} Gamma^m_{jk}
  //        - Gamma^i_{jm} Gamma^m_{ik}
  for (int j = 0; j < d; ++j) {
    for (int kk = j; kk < d; ++kk) {
      double acc = 0.0;
      for (int i = 0; i < d; ++i) {
        acc += dG[i][i][sym_index(j, kk, d)];
        acc -= dG[j][i][sym_index(i, kk, d)];
        for (int mm = 0; mm < d; ++mm) {
          acc += G0.at(i, i, mm) * G0.at(mm, j, kk);
          acc -= G0.at(i, j, mm) * G0.at(mm, i, kk);
        }
      }
      ricci_packed[sym_index(j, kk, d)] = acc;
    }
  }
}

double scalar_curvature_at(const SymTensorField& g, std::int64_t k) {
  const int d = g.d;
  const MetricAt m = metric_at(g, k);
  double ric[10];
  ricci_at(g, k, ric);
  double acc = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) acc += m.upper(i, j) * ric[sym_index(i, j, d)];
  return acc;
}

ScalarField intrinsic_scalar_curvature(const SymTensorField& g) {
  ScalarField out(g.chart);
  const std::int64_t n = g.chart.node_count();
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) out.v[k] = scalar_curvature_at(g, k);
  return out;
}

SymTensorField intrinsic_ricci(const SymTensorField& g) {
  SymTensorField out(g.chart);
  const std::int64_t n = g.chart.node_count();
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    double ric[10];
    ricci_at(g, k, ric);
    for (int c = 0; c < sym_size(g.d); ++c) out.comp[c][k] = ric[c];
  }
  return out;
}

Christoffel christoffel(const InitialDataSet& data, std::int64_t k) {
  return christoffel_at(data.g, k);
}

ScalarField scalar_curvature(const InitialDataSet& data) {
  return intrinsic_scalar_curvature(data.g);
}

ScalarField trace_p(const InitialDataSet& data) {
  ScalarField out(data.chart);
  const std::int64_t n = data.chart.node_count();
  const int d = data.n;
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const MetricAt m = metric_at(data.g, k);
    double acc = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) acc += m.upper(i, j) * data.p.at(i, j, k);
    out.v[k] = acc;
  }
  return out;
}

ScalarField energy_density(const InitialDataSet& data) {
  ScalarField out(data.chart);
  const std::int64_t n = data.chart.node_count();
  const int d = data.n;
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const MetricAt m = metric_at(data.g, k);
    const double R = scalar_curvature_at(data.g, k);
    double trp = 0.0;
    double p2 = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        trp += m.upper(i, j) * data.p.at(i, j, k);
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b)
            p2 += m.upper(i, a) * m.upper(j, b) * data.p.at(i, j, k) * data.p.at(a, b, k);
      }
    out.v[k] = data.mu_convention == MuConvention::Standard
                   ? 0.5 * (R - p2 + trp * trp)
                   : 0.5 * R - p2 + trp * trp;
  }
  return out;
}

CovectorField momentum_density(const InitialDataSet& data) {
  const ScalarField trp = trace_p(data);
  CovectorField out(data.chart);
  const std::int64_t n = data.chart.node_count();
  const int d = data.n;
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const MetricAt m = metric_at(data.g, k);
    const Christoffel G = christoffel_at(data.g, k);
    // dp[l][ij] = d_l p_ij
    double dp[4][10];
    for (int l = 0; l < d; ++l)
      for (int c = 0; c < sym_size(d); ++c) dp[l][c] = fd::d1(data.chart, data.p.comp[c], k, l);
    for (int j = 0; j < d; ++j) {
      double div = 0.0;
      for (int i = 0; i < d; ++i) {
        for (int kk = 0; kk < d; ++kk) {
          double cov = dp[kk][sym_index(i, j, d)];
          for (int mm = 0; mm < d; ++mm) {
            cov -= G.at(mm, kk, i) * data.p.at(mm, j, k);
            cov -= G.at(mm, kk, j) * data.p.at(i, mm, k);
          }
          div += m.upper(i, kk) * cov;
        }
      }
      out.at(j, k) = div - fd::d1(data.chart, trp.v, k, j);
    }
  }
  return out;
}

CovectorField gradient(const ScalarField& f) {
  CovectorField out(f.chart);
  const std::int64_t n = f.chart.node_count();
  const int d = f.chart.dim();
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k)
    for (int a = 0; a < d; ++a) out.at(a, k) = fd::d1(f.chart, f.v, k, a);
  return out;
}

ScalarField modified_dec_margin(const InitialDataSet& data) {
  const ScalarField mu = energy_density(data);
  const CovectorField J = momentum_density(data);
  const ScalarField trp = trace_p(data);
  const CovectorField dh = gradient(data.h);
  ScalarField out(data.chart);
  const std::int64_t n = data.chart.node_count();
  const int d = data.n;
  const double dim_factor = static_cast<double>(d) / (d - 1);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const MetricAt m = metric_at(data.g, k);
    double j2 = 0.0;
    double dh2 = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        j2 += m.upper(i, j) * J.at(i, k) * J.at(j, k);
        dh2 += m.upper(i, j) * dh.at(i, k) * dh.at(j, k);
      }
    const double hk = data.h.v[k];
    out.v[k] = mu.v[k] - std::sqrt(j2) +
               0.5 * (dim_factor * hk * hk - 2.0 * hk * trp.v[k] - 2.0 * std::sqrt(dh2));
  }
  return out;
}

}  // namespace pne
