// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pne/chart.hpp"
#include "pne/smallmat.hpp"

namespace pne {

/// Scalar field sampled on every chart node.
struct ScalarField {
  Chart chart;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const Chart& c, double fill = 0.0)
      : chart(c), v(static_cast<std::size_t>(c.node_count()), fill) {}

  static ScalarField sample(const Chart& c,
                            const std::function<double(const std::array<double, 4>&)>& f);

  double min() const;
  double max() const;
  double max_abs() const;
  void check_finite(const char* what) const;
};

/// Covector (1-form) field; one component array per coordinate index.
struct CovectorField {
  Chart chart;
  int d = 0;
  std::array<std::vector<double>, 4> comp;

  CovectorField() = default;
  explicit CovectorField(const Chart& c);

  double& at(int i, std::int64_t k) { return comp[i][k]; }
  double at(int i, std::int64_t k) const { return comp[i][k]; }
  void check_finite(const char* what) const;
};

/// Symmetric 2-tensor field; stores the packed upper triangle only, so
/// symmetry is structural rather than numerical.
struct SymTensorField {
  Chart chart;
  int d = 0;
  std::array<std::vector<double>, 10> comp;

  SymTensorField() = default;
  explicit SymTensorField(const Chart& c);

  static SymTensorField sample(
      const Chart& c,
      const std::function<void(const std::array<double, 4>&, double*)>& f);

  double& at(int i, int j, std::int64_t k) { return comp[sym_index(i, j, d)][k]; }
  double at(int i, int j, std::int64_t k) const { return comp[sym_index(i, j, d)][k]; }

  /// Packed components at one node.
  void packed(std::int64_t k, double* out) const {
    for (int c = 0; c < sym_size(d); ++c) out[c] = comp[c][k];
  }
  void check_finite(const char* what) const;
};

/// Writes one row per node: chart coordinates first, then the named columns.
void write_fields_csv(const std::string& path, const Chart& chart,
                      const std::vector<std::pair<std::string, const std::vector<double>*>>& cols);

/// Writes arbitrary tabular data (used by surface and profile exports).
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

}  // namespace pne
