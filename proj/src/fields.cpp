// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "pne/fields.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pne/errors.hpp"

namespace pne {

ScalarField ScalarField::sample(
    const Chart& c, const std::function<double(const std::array<double, 4>&)>& f) {
  ScalarField out(c);
  const std::int64_t n = c.node_count();
  for (std::int64_t k = 0; k < n; ++k) out.v[k] = f(c.position(k));
  return out;
}

double ScalarField::min() const {
  double m = v[0];
  for (double x : v) m = std::min(m, x);
  return m;
}

double ScalarField::max() const {
  double m = v[0];
  for (double x : v) m = std::max(m, x);
  return m;
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

void ScalarField::check_finite(const char* what) const {
  for (double x : v)
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite value");
}

CovectorField::CovectorField(const Chart& c) : chart(c), d(c.dim()) {
  for (int i = 0; i < d; ++i)
    comp[i].assign(static_cast<std::size_t>(c.node_count()), 0.0);
}

void CovectorField::check_finite(const char* what) const {
  for (int i = 0; i < d; ++i)
    for (double x : comp[i])
      if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite value");
}

SymTensorField::SymTensorField(const Chart& c) : chart(c), d(c.dim()) {
  for (int i = 0; i < sym_size(d); ++i)
    comp[i].assign(static_cast<std::size_t>(c.node_count()), 0.0);
}

SymTensorField SymTensorField::sample(
    const Chart& c,
    const std::function<void(const std::array<double, 4>&, double*)>& f) {
  SymTensorField out(c);
  const std::int64_t n = c.node_count();
  double buf[10];
  for (std::int64_t k = 0; k < n; ++k) {
    f(c.position(k), buf);
    for (int i = 0; i < sym_size(out.d); ++i) out.comp[i][k] = buf[i];
  }
  return out;
}

void SymTensorField::check_finite(const char* what) const {
  for (int i = 0; i < sym_size(d); ++i)
    for (double x : comp[i])
      if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite value");
}

namespace {
void append_number(std::string& line, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  line += buf;
}
}  // namespace

void write_fields_csv(const std::string& path, const Chart& chart,
                      const std::vector<std::pair<std::string, const std::vector<double>*>>& cols) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open for writing: " + path);
  std::string line;
  for (int a = 0; a < chart.dim(); ++a) line += (a ? ",x" : "x") + std::to_string(a);
  for (const auto& c : cols) line += "," + c.first;
  os << line << "\n";
  const std::int64_t n = chart.node_count();
  for (std::int64_t k = 0; k < n; ++k) {
    line.clear();
    const auto x = chart.position(k);
    for (int a = 0; a < chart.dim(); ++a) {
      if (a) line += ",";
      append_number(line, x[a]);
    }
    for (const auto& c : cols) {
      line += ",";
      append_number(line, (*c.second)[k]);
    }
    os << line << "\n";
  }
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open for writing: " + path);
  std::string line;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) line += ",";
    line += header[i];
  }
  os << line << "\n";
  for (const auto& row : rows) {
    line.clear();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ",";
      append_number(line, row[i]);
    }
    os << line << "\n";
  }
}

}  // namespace pne
