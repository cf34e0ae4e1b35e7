// Copyright (c) 2026 PNE Toolkit contributors
// SPDX-License-Identifier: Apache-2.0
#include "pne/spherical.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "pne/dual.hpp"

namespace pne::spherical {

std::vector<double> SphericalData::grid() const {
  std::vector<double> r(count);
  const double dr = (r_max - r_min) / (count - 1);
  for (int i = 0; i < count; ++i) r[i] = r_min + i * dr;
  return r;
}

void SphericalData::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min)) throw SchemaError("spherical: bad radial range");
  if (count < 5) throw SchemaError("spherical: grid too small");
  if (!lambda || !p_rad || !p_tan || !h || !rho_tan || !rho_tan_prime)
    throw SchemaError("spherical: missing component function");
}

namespace {
std::function<double(double)> zero_fn() {
  return [](double) { return 0.0; };
}
std::function<double(double)> const_fn(double c) {
  return [c](double) { return c; };
}
}  // namespace

SphericalData SphericalData::minkowski(double r_min, double r_max, int count) {
  SphericalData d;
  d.r_min = r_min;
  d.r_max = r_max;
  d.count = count;
  d.lambda = const_fn(1.0);
  d.rho_tan = [](double r) { return r; };
  d.rho_tan_prime = const_fn(1.0);
  d.p_rad = zero_fn();
  d.p_tan = zero_fn();
  d.h = zero_fn();
  return d;
}

SphericalData SphericalData::schwarzschild(double r_min, double r_max, double mass,
                                           SchwarzschildGauge gauge, int pg_sign,
                                           int count) {
  SphericalData d = minkowski(r_min, r_max, count);
  switch (gauge) {
    case SchwarzschildGauge::Areal:
      if (!(r_min >= 2.0 * mass))
        throw SchemaError("spherical schwarzschild areal: r_min must be >= 2m");
      d.lambda = [mass](double r) { return 1.0 / (1.0 - 2.0 * mass / r); };
      break;
    case SchwarzschildGauge::Isotropic:
      d.lambda = [mass](double r) {
        const double psi = 1.0 + 0.5 * mass / r;
        return psi * psi * psi * psi;
      };
      d.rho_tan = [mass](double r) {
        const double psi = 1.0 + 0.5 * mass / r;
        return psi * psi * r;
      };
      d.rho_tan_prime = [mass](double r) {
        const double psi = 1.0 + 0.5 * mass / r;
        return psi * (1.0 - 0.5 * mass / r);
      };
      break;
    case SchwarzschildGauge::PainleveGullstrand:
      d.p_rad = [mass, pg_sign](double r) {
        return -0.5 * pg_sign * std::sqrt(2.0 * mass / r) / r;
      };
      d.p_tan = [mass, pg_sign](double r) {
        return pg_sign * std::sqrt(2.0 * mass / r) / r;
      };
      break;
  }
  return d;
}

SphericalData SphericalData::constant_trace(double r_min, double r_max, double c,
                                            int count) {
  SphericalData d = minkowski(r_min, r_max, count);
  d.p_rad = const_fn(c);
  d.p_tan = const_fn(c);
  return d;
}

SphericalData spherical_from_json(const nlohmann::json& j, int count) {
  if (!j.is_object() || !j.contains("preset"))
    throw SchemaError("spherical oracle: data object with a preset required");
  const std::string preset = j.at("preset").get<std::string>();
  double r_min = 1.0, r_max = 4.0;
  if (j.contains("chart")) {
    const auto& cj = j.at("chart");
    const std::string topo = cj.value("topology", "");
    if (topo == "lat-long-sphere-shell" || topo == "radial-interval") {
      r_min = cj.at("r_min").get<double>();
      r_max = cj.at("r_max").get<double>();
    } else {
      throw SchemaError("spherical oracle needs a radial or lat-long chart");
    }
  }
  SphericalData d;
  if (preset == "minkowski") {
    d = SphericalData::minkowski(r_min, r_max, count);
  } else if (preset == "schwarzschild") {
    const double mass = j.value("mass", 1.0);
    const std::string gauge = j.value("gauge", "areal");
    SchwarzschildGauge gg;
    if (gauge == "areal") gg = SchwarzschildGauge::Areal;
    else if (gauge == "isotropic") gg = SchwarzschildGauge::Isotropic;
    else if (gauge == "pg") gg = SchwarzschildGauge::PainleveGullstrand;
    else throw SchemaError("spherical schwarzschild: unknown gauge");
    d = SphericalData::schwarzschild(r_min, r_max, mass, gg, j.value("pg_sign", 1), count);
  } else if (preset == "constant-trace") {
    d = SphericalData::constant_trace(r_min, r_max, j.at("c").get<double>(), count);
  } else {
    throw SchemaError("spherical oracle: preset \"" + preset +
                      "\" is not spherically symmetric");
  }
  if (j.contains("h")) {
    const auto& hj = j.at("h");
    double hv = 0.0;
    if (hj.is_number()) hv = hj.get<double>();
    else if (hj.is_object() && hj.value("type", "constant") == "constant")
      hv = hj.at("value").get<double>();
    else
      throw SchemaError("spherical oracle supports constant h only");
    d.h = const_fn(hv);
  }
  return d;
}

RadialProfile theta_profile(const SphericalData& data, int orientation) {
  data.validate();
  if (orientation != 1 && orientation != -1)
    throw SchemaError("theta_profile: orientation must be +-1");
  RadialProfile prof;
  prof.n = data.n;
  prof.orientation = orientation;
  prof.r = data.grid();
  prof.value.resize(prof.r.size());
  const int n = data.n;
  auto eval = [data, orientation, n](double r) {
    const double H = orientation * (n - 1) * data.rho_tan_prime(r) /
                     (std::sqrt(data.lambda(r)) * data.rho_tan(r));
    return H + (n - 1) * data.p_tan(r) - data.h(r);
  };
  for (std::size_t i = 0; i < prof.r.size(); ++i) prof.value[i] = eval(prof.r[i]);
  prof.eval = eval;
  return prof;
}

std::vector<PneRoot> find_pne_radii(const RadialProfile& profile) {
  std::vector<PneRoot> roots;
  const auto& r = profile.r;
  const auto& v = profile.value;
  double scale = 1.0;
  for (double x : v)
    if (std::isfinite(x)) scale = std::max(scale, std::fabs(x));
  const double atol = 1e-10 * scale;

  auto slope_at = [&](double x) {
    const double d = 1e-6 * std::max(1.0, std::fabs(x));
    const double fp = profile.eval(x + d);
    const double fm = profile.eval(x - d);
    if (!std::isfinite(fp) || !std::isfinite(fm)) return 1.0;  // boundary root; not flat
    return (fp - fm) / (2.0 * d);
  };
  auto push = [&](double x) {
    roots.push_back({x, std::fabs(slope_at(x)) < 1e-6});
  };

  for (std::size_t i = 0; i < r.size(); ++i) {
    if (std::isfinite(v[i]) && std::fabs(v[i]) <= atol) {
      push(r[i]);
      continue;
    }
    if (i + 1 >= r.size()) break;
    if (!std::isfinite(v[i]) || !std::isfinite(v[i + 1])) continue;
    if (v[i] * v[i + 1] < 0.0 && std::fabs(v[i]) > atol && std::fabs(v[i + 1]) > atol) {
      double a = r[i], b = r[i + 1];
      double fa = v[i];
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = profile.eval(mid);
        if (fm == 0.0 || (b - a) < 1e-14 * std::max(1.0, std::fabs(mid))) {
          a = b = mid;
          break;
        }
        if ((fa < 0.0) != (fm < 0.0)) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      push(0.5 * (a + b));
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const PneRoot& a, const PneRoot& b) { return a.radius < b.radius; });
  std::vector<PneRoot> out;
  for (const PneRoot& root : roots) {
    if (!out.empty() &&
        std::fabs(root.radius - out.back().radius) < 1e-8 * std::max(1.0, root.radius))
      continue;
    out.push_back(root);
  }
  return out;
}

namespace {

// Residual of the radial Jang reduction at an interior node, templated so
// the tridiagonal Jacobian comes from the same expression.
template <class T>
T radial_jang_residual(const SphericalData& d, double tau, double r, double dr,
                       const T& um, const T& u0, const T& up) {
  const int n = d.n;
  auto face_flux = [&](double rf, const T& ua, const T& ub) {
    const double lam = d.lambda(rf);
    const double rt = d.rho_tan(rf);
    const T du = (ub - ua) / dr;
    const T w = sqrt(T(1.0) + du * du / lam);
    return std::pow(rt, n - 1) * du / (std::sqrt(lam) * w);
  };
  const double lam0 = d.lambda(r);
  const double rt0 = d.rho_tan(r);
  const double s0 = std::sqrt(lam0) * std::pow(rt0, n - 1);
  const T fp = face_flux(r + 0.5 * dr, u0, up);
  const T fm = face_flux(r - 0.5 * dr, um, u0);
  const T div = (fp - fm) / (dr * s0);

  const T duc = (up - um) / (2.0 * dr);
  const double gpp = d.p_rad(r) / lam0 + (n - 1) * d.p_tan(r);
  const T proj = (duc / lam0) * (duc / lam0) * d.p_rad(r) / (T(1.0) + duc * duc / lam0);
  return div + gpp - proj - tau * u0 - d.h(r);
}

}  // namespace

RadialJangResult jang_ode_solve(const SphericalData& data, double tau, const RadialBC& bc,
                                double tol, int max_iter,
                                const std::vector<double>* warm_start) {
  data.validate();
  if (!(tau > 0.0)) throw SchemaError("jang_ode_solve: tau must be positive");
  const int N = data.count;
  const std::vector<double> r = data.grid();
  const double dr = r[1] - r[0];

  RadialJangResult st;
  st.r = r;
  st.tau = tau;
  st.u.assign(N, 0.0);
  if (warm_start) {
    if (static_cast<int>(warm_start->size()) != N)
      throw SchemaError("jang_ode_solve: warm start size mismatch");
    st.u = *warm_start;
  }

  using D3 = Dual<3>;
  auto assemble = [&](const std::vector<double>& u, Eigen::VectorXd& res,
                      Eigen::SparseMatrix<double>* jac) {
    std::vector<Eigen::Triplet<double>> trip;
    res.resize(N);
    for (int i = 0; i < N; ++i) {
      if (i == 0 || i == N - 1) {
        if (bc.kind == RadialBC::Kind::Dirichlet) {
          res[i] = u[i] - (i == 0 ? bc.inner : bc.outer);
          if (jac) trip.emplace_back(i, i, 1.0);
        } else {  // zero-slope
          const int nb = (i == 0) ? 1 : N - 2;
          res[i] = u[i] - u[nb];
          if (jac) {
            trip.emplace_back(i, i, 1.0);
            trip.emplace_back(i, nb, -1.0);
          }
        }
        continue;
      }
      if (jac) {
        const D3 um = D3::seed(u[i - 1], 0, 3);
        const D3 u0 = D3::seed(u[i], 1, 3);
        const D3 up = D3::seed(u[i + 1], 2, 3);
        const D3 rr = radial_jang_residual(data, tau, r[i], dr, um, u0, up);
        res[i] = rr.v;
        trip.emplace_back(i, i - 1, rr.d[0]);
        trip.emplace_back(i, i, rr.d[1]);
        trip.emplace_back(i, i + 1, rr.d[2]);
      } else {
        res[i] = radial_jang_residual(data, tau, r[i], dr, u[i - 1], u[i], u[i + 1]);
      }
    }
    if (jac) {
      jac->resize(N, N);
      jac->setFromTriplets(trip.begin(), trip.end());
    }
  };

  Eigen::VectorXd res;
  assemble(st.u, res, nullptr);
  double rnorm = res.cwiseAbs().maxCoeff();

  for (int it = 0; it < max_iter; ++it) {
    if (rnorm < tol) {
      st.residual = rnorm;
      st.iterations = it;
      return st;
    }
    Eigen::SparseMatrix<double> J;
    assemble(st.u, res, &J);
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(J);
    if (lu.info() != Eigen::Success)
      throw RadialJangNonconvergence("jang_ode_solve: singular Jacobian", st);
    const Eigen::VectorXd step = lu.solve(res);

    double damping = 1.0;
    bool accepted = false;
    std::vector<double> trial(N);
    while (damping >= std::ldexp(1.0, -20)) {
      for (int i = 0; i < N; ++i) trial[i] = st.u[i] - damping * step[i];
      Eigen::VectorXd tres;
      assemble(trial, tres, nullptr);
      const double tnorm = tres.cwiseAbs().maxCoeff();
      if (std::isfinite(tnorm) && tnorm < rnorm) {
        st.u = trial;
        rnorm = tnorm;
        accepted = true;
        break;
      }
      damping *= 0.5;
    }
    if (!accepted) {
      st.residual = rnorm;
      st.iterations = it;
      throw RadialJangNonconvergence(
          "jang_ode_solve: damping floor reached with residual " + std::to_string(rnorm),
          st);
    }
  }
  if (rnorm < tol) {
    st.residual = rnorm;
    st.iterations = max_iter;
    return st;
  }
  st.residual = rnorm;
  st.iterations = max_iter;
  throw RadialJangNonconvergence("jang_ode_solve: iteration limit", st);
}

double jang_ode_residual_check(const SphericalData& data, double tau, const RadialBC& bc,
                               const std::vector<double>& u) {
  // Straightforward re-assembly, sharing no code with the Newton loop.
  const int N = data.count;
  const std::vector<double> r = data.grid();
  const double dr = r[1] - r[0];
  const int n = data.n;
  double worst = 0.0;
  for (int i = 1; i + 1 < N; ++i) {
    const double rp = r[i] + 0.5 * dr;
    const double rm = r[i] - 0.5 * dr;
    const double dup = (u[i + 1] - u[i]) / dr;
    const double dum = (u[i] - u[i - 1]) / dr;
    const double wp = std::sqrt(1.0 + dup * dup / data.lambda(rp));
    const double wm = std::sqrt(1.0 + dum * dum / data.lambda(rm));
    const double Fp = std::pow(data.rho_tan(rp), n - 1) * dup / (std::sqrt(data.lambda(rp)) * wp);
    const double Fm = std::pow(data.rho_tan(rm), n - 1) * dum / (std::sqrt(data.lambda(rm)) * wm);
    const double S0 = std::sqrt(data.lambda(r[i])) * std::pow(data.rho_tan(r[i]), n - 1);
    const double div = (Fp - Fm) / (dr * S0);
    const double duc = (u[i + 1] - u[i - 1]) / (2.0 * dr);
    const double lam = data.lambda(r[i]);
    const double term2 = data.p_rad(r[i]) / lam + (n - 1) * data.p_tan(r[i]) -
                         (duc / lam) * (duc / lam) * data.p_rad(r[i]) /
                             (1.0 + duc * duc / lam);
    const double res = div + term2 - tau * u[i] - data.h(r[i]);
    worst = std::max(worst, std::fabs(res));
  }
  if (bc.kind == RadialBC::Kind::Dirichlet) {
    worst = std::max(worst, std::fabs(u[0] - bc.inner));
    worst = std::max(worst, std::fabs(u[N - 1] - bc.outer));
  } else {
    worst = std::max(worst, std::fabs(u[0] - u[1]));
    worst = std::max(worst, std::fabs(u[N - 1] - u[N - 2]));
  }
  return worst;
}

}  // namespace pne::spherical
