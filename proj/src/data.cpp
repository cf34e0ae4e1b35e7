// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "pne/data.hpp"

#include <cmath>
#include <set>

#include "pne/rng.hpp"

namespace pne {

namespace {
constexpr double kDetFloor = 1e-12;
constexpr double kPi = 3.14159265358979323846;

double radius_of(const std::array<double, 4>& x, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += x[i] * x[i];
  return std::sqrt(s);
}
}  // namespace

void InitialDataSet::validate() const {
  if (n != chart.dim())
    throw SchemaError("initial data: n must equal the chart coordinate dimension");
  if (n < 3) throw SchemaError("initial data: dimension n must be >= 3");
  g.check_finite("metric g");
  p.check_finite("tensor p");
  h.check_finite("prescription h");
  const std::int64_t nodes = chart.node_count();
  double m[10];
  for (std::int64_t k = 0; k < nodes; ++k) {
    g.packed(k, m);
    // leading principal minors of the packed symmetric matrix
    for (int sz = 1; sz <= n; ++sz) {
      double sub[10];
      for (int i = 0; i < sz; ++i)
        for (int j = i; j < sz; ++j)
          sub[sym_index(i, j, sz)] = m[sym_index(i, j, n)];
      const double det = sym_det(sub, sz);
      if (!(det > 0.0) || (sz == n && det < kDetFloor))
        throw DegenerateMetricError("metric not positive definite at node " +
                                    std::to_string(k));
    }
  }
}

SymTensorField flat_metric(const Chart& chart) {
  SymTensorField g(chart);
  const int d = chart.dim();
  const std::int64_t n = chart.node_count();
  if (chart.topology() == Topology::LatLongSphereShell) {
    for (std::int64_t k = 0; k < n; ++k) {
      const auto x = chart.position(k);
      const double r = x[0], th = x[1];
      g.at(0, 0, k) = 1.0;
      g.at(1, 1, k) = r * r;
      g.at(2, 2, k) = r * r * std::sin(th) * std::sin(th);
    }
  } else {
    for (std::int64_t k = 0; k < n; ++k)
      for (int i = 0; i < d; ++i) g.at(i, i, k) = 1.0;
  }
  return g;
}

InitialDataSet make_minkowski(const Chart& chart) {
  InitialDataSet d;
  d.chart = chart;
  d.n = chart.dim();
  d.g = flat_metric(chart);
  d.p = SymTensorField(chart);
  d.h = ScalarField(chart);
  d.validate();
  return d;
}

InitialDataSet make_schwarzschild(const Chart& chart, double mass,
                                  SchwarzschildGauge gauge, int pg_sign) {
  if (!(mass > 0.0)) throw SchemaError("schwarzschild: mass must be positive");
  if (pg_sign != 1 && pg_sign != -1) throw SchemaError("schwarzschild: pg_sign must be +-1");
  InitialDataSet d;
  d.chart = chart;
  d.n = chart.dim();
  d.p = SymTensorField(chart);
  d.h = ScalarField(chart);
  const std::int64_t nodes = chart.node_count();

  if (gauge == SchwarzschildGauge::Areal) {
    if (chart.topology() != Topology::LatLongSphereShell)
      throw SchemaError("schwarzschild areal gauge needs a lat-long shell chart");
    if (!(chart.axis(0).origin > 2.0 * mass))
      throw SchemaError("schwarzschild areal slice requires r_min > 2m");
    d.g = SymTensorField(chart);
    for (std::int64_t k = 0; k < nodes; ++k) {
      const auto x = chart.position(k);
      const double r = x[0], th = x[1];
      d.g.at(0, 0, k) = 1.0 / (1.0 - 2.0 * mass / r);
      d.g.at(1, 1, k) = r * r;
      d.g.at(2, 2, k) = r * r * std::sin(th) * std::sin(th);
    }
  } else if (gauge == SchwarzschildGauge::Isotropic) {
    d.g = SymTensorField(chart);
    for (std::int64_t k = 0; k < nodes; ++k) {
      const auto c = chart.cartesian(k);
      const double rho = radius_of(c, 3);
      if (!(rho > 0.0)) throw SchemaError("schwarzschild isotropic: chart touches rho = 0");
      const double psi = 1.0 + 0.5 * mass / rho;
      const double p4 = psi * psi * psi * psi;
      if (chart.topology() == Topology::LatLongSphereShell) {
        const auto x = chart.position(k);
        const double r = x[0], th = x[1];
        d.g.at(0, 0, k) = p4;
        d.g.at(1, 1, k) = p4 * r * r;
        d.g.at(2, 2, k) = p4 * r * r * std::sin(th) * std::sin(th);
      } else {
        for (int i = 0; i < d.n; ++i) d.g.at(i, i, k) = p4;
      }
    }
  } else {  // Painleve-Gullstrand: flat metric, nonzero p, regular across r = 2m
    if (chart.topology() != Topology::LatLongSphereShell)
      throw SchemaError("schwarzschild pg gauge needs a lat-long shell chart");
    d.g = flat_metric(chart);
    for (std::int64_t k = 0; k < nodes; ++k) {
      const auto x = chart.position(k);
      const double r = x[0], th = x[1];
      const double a = std::sqrt(2.0 * mass / r) / r;
      // pg_sign = +1 is the expanding slice: p_tan = +a, p_rad = -a/2.
      d.p.at(0, 0, k) = -0.5 * pg_sign * a;
      d.p.at(1, 1, k) = pg_sign * a * r * r;
      d.p.at(2, 2, k) = pg_sign * a * r * r * std::sin(th) * std::sin(th);
    }
  }
  d.validate();
  return d;
}

InitialDataSet make_constant_trace(const Chart& chart, double c) {
  InitialDataSet d = make_minkowski(chart);
  for (int i = 0; i < sym_size(d.n); ++i)
    for (std::size_t k = 0; k < d.p.comp[i].size(); ++k)
      d.p.comp[i][k] = c * d.g.comp[i][k];
  return d;
}

ConformalFactor polynomial_perturbation_factor(std::uint64_t seed, double amplitude,
                                               double puncture_mass) {
  DetRng rng(seed);
  const double p0 = rng.uniform(0.0, 1.0);
  std::array<double, 3> b{};
  for (double& x : b) x = rng.uniform(-1.0, 1.0);
  // traceless quadratic part plus an isotropic -s|x|^2 term; Delta P = -6s < 0
  double q[6];
  for (double& x : q) x = rng.uniform(-1.0, 1.0);
  const double trace = (q[0] + q[3] + q[5]) / 3.0;
  q[0] -= trace;
  q[3] -= trace;
  q[5] -= trace;
  const double s = rng.uniform(0.5, 1.0);

  auto poly = [=](const std::array<double, 4>& c) {
    const double x = c[0], y = c[1], z = c[2];
    double v = p0 + b[0] * x + b[1] * y + b[2] * z;
    v += q[0] * x * x + q[3] * y * y + q[5] * z * z;
    v += 2.0 * (q[1] * x * y + q[2] * x * z + q[4] * y * z);
    v -= s * (x * x + y * y + z * z);
    return v;
  };

  ConformalFactor f;
  f.psi = [=](const std::array<double, 4>& c) {
    double v = 1.0 + amplitude * poly(c);
    if (puncture_mass > 0.0) v += 0.5 * puncture_mass / radius_of(c, 3);
    return v;
  };
  f.laplacian_psi = [=](const std::array<double, 4>&) {
    return amplitude * (-6.0 * s);  // the 1/|x| term is harmonic away from 0
  };
  return f;
}

InitialDataSet make_polynomial_perturbation(const Chart& chart, std::uint64_t seed,
                                            double amplitude, double puncture_mass) {
  if (chart.dim() != 3)
    throw SchemaError("polynomial-perturbation preset is three-dimensional");
  const ConformalFactor f = polynomial_perturbation_factor(seed, amplitude, puncture_mass);
  InitialDataSet d;
  d.chart = chart;
  d.n = 3;
  d.g = SymTensorField(chart);
  d.p = SymTensorField(chart);
  d.h = ScalarField(chart);
  const std::int64_t nodes = chart.node_count();
  for (std::int64_t k = 0; k < nodes; ++k) {
    const double psi = f.psi(chart.cartesian(k));
    if (!(psi > 0.1))
      throw SchemaError("polynomial-perturbation: conformal factor too close to zero; "
                        "reduce amplitude or shrink the chart");
    const double p4 = psi * psi * psi * psi;
    if (chart.topology() == Topology::LatLongSphereShell) {
      const auto x = chart.position(k);
      const double r = x[0], th = x[1];
      d.g.at(0, 0, k) = p4;
      d.g.at(1, 1, k) = p4 * r * r;
      d.g.at(2, 2, k) = p4 * r * r * std::sin(th) * std::sin(th);
    } else {
      for (int i = 0; i < 3; ++i) d.g.at(i, i, k) = p4;
    }
  }
  d.validate();
  return d;
}

namespace {

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw SchemaError("unknown key \"" + it.key() + "\" in " + where);
}

std::vector<int> int_list(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError(what + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<double> double_list(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw SchemaError(what + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

Chart chart_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("chart must be an object");
  if (!j.contains("topology")) throw SchemaError("chart: missing topology");
  const std::string topo = j.at("topology").get<std::string>();
  if (topo == "periodic-box") {
    reject_unknown_keys(j, {"topology", "extents", "nodes", "mins"}, "chart");
    const auto extents = double_list(j.at("extents"), "chart.extents");
    const auto nodes = int_list(j.at("nodes"), "chart.nodes");
    std::vector<double> mins;
    if (j.contains("mins")) mins = double_list(j.at("mins"), "chart.mins");
    return Chart::periodic_box(extents, nodes, mins);
  }
  if (topo == "lat-long-sphere-shell") {
    reject_unknown_keys(j, {"topology", "r_min", "r_max", "nodes"}, "chart");
    const auto nodes = int_list(j.at("nodes"), "chart.nodes");
    if (nodes.size() != 3) throw SchemaError("lat-long chart: nodes must be [nr,ntheta,nphi]");
    return Chart::lat_long_shell(j.at("r_min").get<double>(), j.at("r_max").get<double>(),
                                 nodes[0], nodes[1], nodes[2]);
  }
  if (topo == "radial-interval") {
    reject_unknown_keys(j, {"topology", "r_min", "r_max", "nodes"}, "chart");
    return Chart::radial_interval(j.at("r_min").get<double>(), j.at("r_max").get<double>(),
                                  j.at("nodes").get<int>());
  }
  throw SchemaError("chart: unknown topology \"" + topo + "\"");
}

ScalarField h_from_json(const Chart& chart, const nlohmann::json& j) {
  if (j.is_number()) {
    ScalarField h(chart, j.get<double>());
    return h;
  }
  if (!j.is_object()) throw SchemaError("h must be a number or an object");
  const std::string type = j.value("type", "constant");
  if (type == "constant") {
    reject_unknown_keys(j, {"type", "value"}, "h");
    return ScalarField(chart, j.at("value").get<double>());
  }
  if (type == "sinusoidal") {
    reject_unknown_keys(j, {"type", "offset", "amplitude", "axis", "periods"}, "h");
    const double off = j.at("offset").get<double>();
    const double amp = j.at("amplitude").get<double>();
    const int axis = j.value("axis", 0);
    const double periods = j.value("periods", 1.0);
    if (axis < 0 || axis >= chart.dim()) throw SchemaError("h: axis out of range");
    const Axis& ax = chart.axis(axis);
    const double span = ax.periodic ? ax.wrap : ax.spacing * (ax.count - 1);
    return ScalarField::sample(chart, [&, off, amp, axis, periods, span](
                                          const std::array<double, 4>& x) {
      return off + amp * std::sin(2.0 * kPi * periods * (x[axis] - ax.origin) / span);
    });
  }
  throw SchemaError("h: unknown type \"" + type + "\"");
}

InitialDataSet data_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("data must be an object");
  if (!j.contains("preset")) throw SchemaError("data: missing preset");
  if (!j.contains("chart")) throw SchemaError("data: missing chart");
  const std::string preset = j.at("preset").get<std::string>();
  const Chart chart = chart_from_json(j.at("chart"));

  InitialDataSet d;
  if (preset == "minkowski") {
    reject_unknown_keys(j, {"preset", "chart", "h"}, "data");
    d = make_minkowski(chart);
  } else if (preset == "schwarzschild") {
    reject_unknown_keys(j, {"preset", "chart", "h", "mass", "gauge", "pg_sign"}, "data");
    const double mass = j.value("mass", 1.0);
    const std::string gauge = j.value("gauge", "areal");
    SchwarzschildGauge gg;
    if (gauge == "areal") gg = SchwarzschildGauge::Areal;
    else if (gauge == "isotropic") gg = SchwarzschildGauge::Isotropic;
    else if (gauge == "pg") gg = SchwarzschildGauge::PainleveGullstrand;
    else throw SchemaError("schwarzschild: unknown gauge \"" + gauge + "\"");
    d = make_schwarzschild(chart, mass, gg, j.value("pg_sign", 1));
  } else if (preset == "constant-trace") {
    reject_unknown_keys(j, {"preset", "chart", "h", "c"}, "data");
    d = make_constant_trace(chart, j.at("c").get<double>());
  } else if (preset == "polynomial-perturbation") {
    reject_unknown_keys(j, {"preset", "chart", "h", "seed", "amplitude", "puncture_mass"},
                        "data");
    d = make_polynomial_perturbation(chart, j.value("seed", std::uint64_t{0}),
                                     j.value("amplitude", 0.05),
                                     j.value("puncture_mass", 0.0));
  } else if (preset == "custom") {
    reject_unknown_keys(j, {"preset", "chart", "h", "g", "p"}, "data");
    d.chart = chart;
    d.n = chart.dim();
    d.g = SymTensorField(chart);
    d.p = SymTensorField(chart);
    d.h = ScalarField(chart);
    const std::int64_t nodes = chart.node_count();
    auto load_tensor = [&](const nlohmann::json& tj, SymTensorField& out,
                           const std::string& what) {
      if (!tj.is_array() || static_cast<int>(tj.size()) != sym_size(d.n))
        throw SchemaError(what + ": expected " + std::to_string(sym_size(d.n)) +
                          " component tables");
      for (int c = 0; c < sym_size(d.n); ++c) {
        const auto vals = double_list(tj.at(c), what + " component");
        if (static_cast<std::int64_t>(vals.size()) != nodes)
          throw SchemaError(what + ": component table length mismatch");
        out.comp[c].assign(vals.begin(), vals.end());
      }
    };
    load_tensor(j.at("g"), d.g, "custom g");
    if (j.contains("p")) load_tensor(j.at("p"), d.p, "custom p");
    d.validate();
  } else {
    throw SchemaError("data: unknown preset \"" + preset + "\"");
  }

  if (j.contains("h")) d.h = h_from_json(chart, j.at("h"));
  return d;
}

}  // namespace pne
