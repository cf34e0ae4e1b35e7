// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pne {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Metric determinant below the hard floor (1e-12) or a leading minor <= 0.
class DegenerateMetricError : public Error {
 public:
  using Error::Error;
};

/// A surface node left the chart's interpolation range.
class OutOfChartError : public Error {
 public:
  using Error::Error;
};

/// Tangent plane of a graph surface degenerated (det g_Sigma ~ 0).
class DegenerateSurfaceError : public Error {
 public:
  using Error::Error;
};

/// Inner shell boundary touches or crosses the outer one.
class InvalidShellError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a closed surface grid (sphere or torus graph).
class UnsupportedTopologyError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Config/JSON input failed validation.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Principal eigenfunction changed sign beyond tolerance; by the
/// Krein-Rutman theorem this cannot happen in the continuum, so it
/// signals a discretization bug.
class KreinRutmanViolationError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver stagnated before reaching its tolerance.
class NonconvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace pne
