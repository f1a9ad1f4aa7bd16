#include "oscylinder/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>

#include "oscylinder/errors.hpp"
#include "oscylinder/numerics.hpp"
#include "oscylinder/stress.hpp"

namespace oscylinder {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
// Field values carry a few ulps of error; the floor estimate allows for that.
constexpr double rounding = 8.0 * eps;
const Complex imag_unit{0.0, 1.0};

std::size_t index(Residual which) { return static_cast<std::size_t>(which); }

struct Derivatives {
  Complex d1;
  Complex d2;
};

// Radial samples of one field at the stencil radii.
struct RadialStencil {
  bool forward;
  double h;
  std::array<double, 4> r;  // central: r, r - h, r + h; forward: r, r + h, r + 2h, r + 3h
  int size;

  template <class F>
  Derivatives apply(F f) const {
    if (forward) {
      const Complex f0 = f(0), f1 = f(1), f2 = f(2), f3 = f(3);
      return {(-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h), (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (h * h)};
    }
    const Complex f0 = f(0), fm = f(1), fp = f(2);
    return {(fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)};
  }
  // Sums of absolute stencil weights, for the rounding estimate.
  [[nodiscard]] double weight1() const { return forward ? 4.0 / h : 1.0 / h; }
  [[nodiscard]] double weight2() const { return forward ? 12.0 / (h * h) : 4.0 / (h * h); }
};

RadialStencil make_stencil(const Scenario& s, double r, double h, Stencil policy) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw StepError("finite-difference step must be positive");
  }
  if (!(r >= s.radius())) {
    throw DomainError("residual evaluation requires r >= a");
  }
  if (r - h >= s.radius()) {
    return {false, h, {r, r - h, r + h, 0.0}, 3};
  }
  if (policy == Stencil::central) {
    throw StepError("central stencil crosses the cylinder surface (r - h < a)");
  }
  return {true, h, {r, r + h, r + 2.0 * h, r + 3.0 * h}, 4};
}

struct ComplexResiduals {
  std::array<Complex, residual_count> value;
  std::array<double, residual_count> floor;
};

ComplexResiduals evaluate(const Scenario& s, PolarPoint pt, double t, double h, Stencil policy) {
  const RadialStencil rs = make_stencil(s, pt.r, h, policy);
  const double r = pt.r;
  const double dth = h / r;

  std::array<FlowState, 4> radial{};
  for (int i = 0; i < rs.size; ++i) {
    radial[i] = flow_state(s, {rs.r[i], pt.theta}, t);
  }
  const FlowState c = radial[0];
  const FlowState am = flow_state(s, {r, pt.theta - dth}, t);
  const FlowState ap = flow_state(s, {r, pt.theta + dth}, t);

  auto angular = [&](auto field) -> Derivatives {
    const Complex f0 = field(c), fm = field(am), fp = field(ap);
    return {(fp - fm) / (2.0 * dth), (fp - 2.0 * f0 + fm) / (dth * dth)};
  };
  auto vr = [](const FlowState& f) { return f.vr; };
  auto vt = [](const FlowState& f) { return f.vtheta; };
  auto p = [](const FlowState& f) { return f.p; };

  const Derivatives vr_r = rs.apply([&](int i) { return radial[i].vr; });
  const Derivatives vt_r = rs.apply([&](int i) { return radial[i].vtheta; });
  const Derivatives p_r = rs.apply([&](int i) { return radial[i].p; });
  const Derivatives rvr_r = rs.apply([&](int i) { return rs.r[i] * radial[i].vr; });
  const Derivatives vr_t = angular(vr);
  const Derivatives vt_t = angular(vt);
  const Derivatives p_t = angular(p);

  const double a = s.radius();
  const double nu = s.fluid().nu0;
  const double rho = s.fluid().rho0;
  const double omega = s.omega();
  const double unit = s.v0() > 0.0 ? s.v0() : 1.0;
  const double scale_c = unit / a;
  const double scale_m = unit * (omega + nu / (a * a));
  const double scale_p = rho * scale_m / a;
  const double r2 = r * r;

  const Complex lap_vr = vr_r.d2 + vr_r.d1 / r + vr_t.d2 / r2;
  const Complex lap_vt = vt_r.d2 + vt_r.d1 / r + vt_t.d2 / r2;
  const Complex ddt_vr = -imag_unit * omega * c.vr;
  const Complex ddt_vt = -imag_unit * omega * c.vtheta;

  ComplexResiduals out;
  auto set = [&](Residual w, Complex v) { out.value[index(w)] = v; };

  set(Residual::continuity, (rvr_r.d1 + vt_t.d1) / r / scale_c);
  set(Residual::continuity_expanded, (vr_r.d1 + c.vr / r + vt_t.d1 / r) / scale_c);
  set(Residual::momentum_r,
      (ddt_vr + p_r.d1 / rho - nu * (lap_vr - c.vr / r2 - 2.0 * vt_t.d1 / r2)) / scale_m);
  set(Residual::momentum_theta,
      (ddt_vt + p_t.d1 / (rho * r) - nu * (lap_vt - c.vtheta / r2 + 2.0 * vr_t.d1 / r2)) / scale_m);
  // -(1/rho0) d_r p with the ansatz p = (C/r + i r rho0 omega v0) cos(theta).
  const Complex pressure_force =
      (coefficient_C(s) / (rho * r2) - imag_unit * omega * s.v0()) * std::cos(pt.theta) * s.phase(t);
  set(Residual::momentum_r_decoupled,
      (ddt_vr - pressure_force - nu * (vr_r.d2 + vr_t.d2 / r2 + 3.0 * vr_r.d1 / r + c.vr / r2)) /
          scale_m);
  set(Residual::pressure_laplacian, (p_r.d2 + p_r.d1 / r + p_t.d2 / r2) / scale_p);

  // Rounding level: largest sample magnitude times the summed stencil weights.
  double mv = 0.0;
  double mp = 0.0;
  auto track = [&](const FlowState& f) {
    mv = std::max({mv, std::abs(f.vr), std::abs(f.vtheta)});
    mp = std::max(mp, std::abs(f.p));
  };
  for (int i = 0; i < rs.size; ++i) {
    track(radial[i]);
  }
  track(am);
  track(ap);
  // Near the wall the velocity is a small difference of terms as large as the
  // pressure velocity scale p/(rho0 omega r); its rounding error is set by those.
  mv = std::max({mv, s.v0(), mp / (rho * omega * r)});
  const double w1 = rs.weight1();
  const double w2 = rs.weight2();
  const double a1 = 1.0 / dth;
  const double a2 = 4.0 / (dth * dth);
  const double r_max = rs.r[rs.size - 1];
  out.floor[index(Residual::continuity)] = rounding * mv * (r_max * w1 + a1) / r / scale_c;
  out.floor[index(Residual::continuity_expanded)] = rounding * mv * (w1 + (1.0 + a1) / r) / scale_c;
  const double viscous = nu * mv * (w2 + 3.0 * w1 / r + (a2 + 2.0 * a1 + 1.0) / r2);
  out.floor[index(Residual::momentum_r)] = rounding * (omega * mv + mp * w1 / rho + viscous) / scale_m;
  out.floor[index(Residual::momentum_theta)] =
      rounding * (omega * mv + mp * a1 / (rho * r) + viscous) / scale_m;
  out.floor[index(Residual::momentum_r_decoupled)] =
      rounding * (omega * mv + std::abs(pressure_force) + viscous) / scale_m;
  out.floor[index(Residual::pressure_laplacian)] =
      rounding * mp * (w2 + w1 / r + a2 / r2) / scale_p;
  return out;
}

ResidualReport to_report(PolarPoint pt, double h, const ComplexResiduals& c) {
  ResidualReport rep{pt, h, {}, c.floor};
  for (std::size_t i = 0; i < residual_count; ++i) {
    rep.value[i] = std::abs(c.value[i]);
  }
  return rep;
}

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

// Runs `body`, turning any exception into a failed check.
template <class Body>
CheckResult guarded(std::string name, double limit, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {std::move(name), false, std::numeric_limits<double>::quiet_NaN(), limit, e.what()};
  }
}

CheckResult at_most(std::string name, double value, double limit, std::string detail = {}) {
  return {std::move(name), value <= limit, value, limit, std::move(detail)};
}

double velocity_magnitude(const Velocity& v) { return std::hypot(std::abs(v.vr), std::abs(v.vtheta)); }

}  // namespace

std::string_view to_string(Residual which) {
  switch (which) {
    case Residual::continuity:
      return "continuity";
    case Residual::continuity_expanded:
      return "continuity_expanded";
    case Residual::momentum_r:
      return "momentum_r";
    case Residual::momentum_theta:
      return "momentum_theta";
    case Residual::momentum_r_decoupled:
      return "momentum_r_decoupled";
    case Residual::pressure_laplacian:
      return "pressure_laplacian";
  }
  return "unknown";
}

ResidualReport residuals(const Scenario& s, PolarPoint pt, double t, double h, Stencil stencil) {
  return to_report(pt, h, evaluate(s, pt, t, h, stencil));
}

double continuity_residual(const Scenario& s, PolarPoint pt, double t, double h, Stencil stencil) {
  return residuals(s, pt, t, h, stencil).at(Residual::continuity);
}

MomentumResidual momentum_residual(const Scenario& s, PolarPoint pt, double t, double h,
                                   Stencil stencil) {
  const ResidualReport rep = residuals(s, pt, t, h, stencil);
  return {rep.at(Residual::momentum_r), rep.at(Residual::momentum_theta)};
}

double pressure_laplacian_residual(const Scenario& s, PolarPoint pt, double t, double h,
                                   Stencil stencil) {
  return residuals(s, pt, t, h, stencil).at(Residual::pressure_laplacian);
}

OrderReport estimate_order(const Scenario& s, PolarPoint pt, double t, double h, Stencil stencil) {
  constexpr int max_doublings = 10;
  constexpr double margin = 100.0;
  // Keep the coarsest step small against r so the leading error term dominates.
  const double h_max = 0.1 * pt.r;

  // levels[k] is the evaluation at h 2^(k-2).
  std::vector<ComplexResiduals> levels;
  auto level = [&](std::size_t k) -> const ComplexResiduals& {
    while (levels.size() <= k) {
      const double step = h * std::ldexp(1.0, static_cast<int>(levels.size()) - 2);
      levels.push_back(evaluate(s, pt, t, step, stencil));
    }
    return levels[k];
  };

  OrderReport out;
  for (std::size_t c = 0; c < residual_count; ++c) {
    for (int j = 0; j <= max_doublings; ++j) {
      const double coarse = h * std::ldexp(1.0, j);
      if (coarse > h_max) {
        break;
      }
      if (stencil == Stencil::central && pt.r - coarse < s.radius()) {
        break;
      }
      const ComplexResiduals& r1 = level(j + 2);
      const ComplexResiduals& r2 = level(j + 1);
      const ComplexResiduals& r3 = level(j);
      const double smallest =
          std::min({std::abs(r1.value[c]), std::abs(r2.value[c]), std::abs(r3.value[c])});
      if (smallest < margin * r3.floor[c]) {
        continue;
      }
      out.order[c] = std::log2(std::abs(r1.value[c] - r2.value[c]) /
                               std::abs(r2.value[c] - r3.value[c]));
      out.step[c] = coarse;
      break;
    }
  }
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport boundary_suite(const Scenario& s) {
  SuiteReport rep{"boundary", {}};
  const double a = s.radius();
  const double unit = s.v0() > 0.0 ? s.v0() : 1.0;
  const double period = s.period();
  constexpr int angles = 64;
  constexpr int times = 4;

  rep.checks.push_back(guarded("no_slip", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k < times; ++k) {
      const double t = period * k / times;
      for (int j = 0; j < angles; ++j) {
        const double theta = 2.0 * pi * j / angles;
        worst = std::max(worst, velocity_magnitude(velocity(s, {a, theta}, t)) / unit);
      }
    }
    return at_most("no_slip", worst, 1e-12, "max |v(a, theta, t)|/v0");
  }));

  const double delta = std::sqrt(2.0 * s.fluid().nu0 / s.omega());
  const double far = std::max(1e3 * a, 20.0 * delta);
  rep.checks.push_back(guarded("far_field_velocity", 1e-3, [&] {
    double worst = 0.0;
    for (int k = 0; k < times; ++k) {
      const double t = period * k / times;
      const CartesianVector inf = far_field_velocity(s, t);
      for (int j = 0; j < angles; ++j) {
        const double theta = 2.0 * pi * j / angles;
        const CartesianVector v = to_cartesian(velocity(s, {far, theta}, t), std::cos(theta),
                                               std::sin(theta));
        worst = std::max(worst, std::hypot(std::abs(v.x - inf.x), std::abs(v.y - inf.y)) / unit);
      }
    }
    return at_most("far_field_velocity", worst, 1e-3, format("max |v - v_inf|/v0 at r = %.6e m", far));
  }));

  rep.checks.push_back(guarded("far_field_pressure", 1e-4, [&] {
    const double r = 1e6 * a;
    const Complex expected = far_field_pressure(s, r, 0.0);
    const Complex got = pressure(s, {r, 0.0}, 0.0);
    const double err = std::abs(expected) > 0.0 ? std::abs(got / expected - 1.0) : std::abs(got);
    return at_most("far_field_pressure", err, 1e-4, "relative deviation of p/(r cos theta) at 1e6 a");
  }));

  rep.checks.push_back(guarded("pressure_angular_structure", 1e-13, [&] {
    double worst = 0.0;
    for (double x : {1.0, 1.5, 3.0, 10.0, 100.0}) {
      const Complex ref = pressure(s, {a * x, 0.0}, 0.0);
      for (int j = 1; j < angles; ++j) {
        const double theta = 2.0 * pi * j / angles;
        const double c = std::cos(theta);
        if (std::abs(c) < 0.1) {
          continue;
        }
        const Complex ratio = pressure(s, {a * x, theta}, 0.0) / c;
        worst = std::max(worst, std::abs(ref) > 0.0 ? std::abs(ratio - ref) / std::abs(ref)
                                                    : std::abs(ratio));
      }
    }
    return at_most("pressure_angular_structure", worst, 1e-13,
                   "spread of p(r, theta)/cos(theta) over theta");
  }));

  rep.checks.push_back(guarded("parity", 1e-13, [&] {
    // p and v_r even in theta, v_theta odd; p and v_r odd under theta -> pi - theta.
    double worst = 0.0;
    for (double x : {1.0, 1.7, 12.0}) {
      double norm_p = 0.0;
      double norm_v = 0.0;
      std::vector<std::array<FlowState, 3>> samples;
      for (int j = 0; j < angles; ++j) {
        const double theta = 2.0 * pi * (j + 0.37) / angles;
        std::array<FlowState, 3> f{flow_state(s, {a * x, theta}, 0.0),
                                   flow_state(s, {a * x, -theta}, 0.0),
                                   flow_state(s, {a * x, pi - theta}, 0.0)};
        norm_p = std::max(norm_p, std::abs(f[0].p));
        norm_v = std::max({norm_v, std::abs(f[0].vr), std::abs(f[0].vtheta)});
        samples.push_back(f);
      }
      norm_p = norm_p > 0.0 ? norm_p : 1.0;
      norm_v = norm_v > 0.0 ? norm_v : 1.0;
      for (const auto& f : samples) {
        worst = std::max({worst, std::abs(f[1].p - f[0].p) / norm_p,
                          std::abs(f[2].p + f[0].p) / norm_p,
                          std::abs(f[1].vr - f[0].vr) / norm_v,
                          std::abs(f[1].vtheta + f[0].vtheta) / norm_v,
                          std::abs(f[2].vr + f[0].vr) / norm_v,
                          std::abs(f[2].vtheta - f[0].vtheta) / norm_v});
      }
    }
    return at_most("parity", worst, 1e-13, "max deviation from the theta parities");
  }));
  return rep;
}

SuiteReport residual_suite(const Scenario& s, unsigned threads) {
  SuiteReport rep{"residuals", {}};
  constexpr int nr = 5;
  constexpr int nth = 5;
  constexpr double relative_step = 1e-4;
  constexpr double tolerance = 1e-6;
  constexpr double order_low = 1.8;
  constexpr double order_high = 2.2;
  constexpr double identity_tolerance = 1e-12;
  const double a = s.radius();
  const double t = s.period() / 8.0;

  struct PointResult {
    ResidualReport report{};
    OrderReport order;
    double identity_gap = 0.0;
    std::string error;
  };
  std::vector<PointResult> results(nr * nth);
  parallel_for(results.size(), threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / nth;
    const int j = static_cast<int>(idx) % nth;
    const double r = a * 1.1 * std::pow(100.0 / 1.1, static_cast<double>(i) / (nr - 1));
    const PolarPoint pt{r, pi * (j + 0.3) / nth};
    PointResult& out = results[idx];
    try {
      const double h = relative_step * r;
      out.report = residuals(s, pt, t, h);
      out.order = estimate_order(s, pt, t, h);
      // Both forms of the continuity equation, extrapolated to h -> 0 from a
      // coarser pair of steps, must agree.
      const double coarse = 5e-4 * std::min(r, 1.0 / s.beta());
      const ComplexResiduals e1 = evaluate(s, pt, t, coarse, Stencil::central);
      const ComplexResiduals e2 = evaluate(s, pt, t, 0.5 * coarse, Stencil::central);
      auto extrapolate = [&](Residual w) {
        return (4.0 * e2.value[index(w)] - e1.value[index(w)]) / 3.0;
      };
      out.identity_gap = std::abs(extrapolate(Residual::continuity) -
                                  extrapolate(Residual::continuity_expanded));
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  });

  for (const PointResult& pr : results) {
    if (!pr.error.empty()) {
      rep.checks.push_back({"residual_evaluation", false, std::numeric_limits<double>::quiet_NaN(),
                            0.0, pr.error});
      return rep;
    }
  }

  for (Residual w : all_residuals) {
    double worst = 0.0;
    for (const PointResult& pr : results) {
      worst = std::max(worst, pr.report.at(w));
    }
    rep.checks.push_back(at_most(std::string(to_string(w)), worst, tolerance, "h = 1e-4 r"));
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  int estimated = 0;
  for (const PointResult& pr : results) {
    for (const auto& p : pr.order.order) {
      if (p) {
        lo = std::min(lo, *p);
        hi = std::max(hi, *p);
        ++estimated;
      }
    }
  }
  const double deviation = estimated > 0 ? std::max(2.0 - lo, hi - 2.0) : 0.0;
  rep.checks.push_back({"convergence_order",
                        estimated > 0 && lo >= order_low && hi <= order_high, deviation,
                        order_high - 2.0,
                        format("observed order in [%.4f, %.4f] from %.0f estimates", lo, hi,
                               estimated)});

  double gap = 0.0;
  for (const PointResult& pr : results) {
    gap = std::max(gap, pr.identity_gap);
  }
  rep.checks.push_back(at_most("continuity_forms_agree", gap, identity_tolerance,
                               "extrapolated conservative vs expanded continuity"));
  return rep;
}

SuiteReport force_suite(const Scenario& s, unsigned threads) {
  SuiteReport rep{"force", {}};
  constexpr int nodes = 512;
  const double t = 0.0;
  auto relative = [](Complex got, Complex want) {
    return std::abs(want) > 0.0 ? std::abs(got - want) / std::abs(want) : std::abs(got);
  };

  rep.checks.push_back(guarded("quadrature_vs_analytic", 1e-9, [&] {
    const ForceResult q = force_quadrature(s, t, nodes, threads);
    const ForceResult f = force_analytic(s, t);
    return at_most("quadrature_vs_analytic", relative(q.fx, f.fx), 1e-9, "512 nodes");
  }));
  rep.checks.push_back(guarded("transverse_force", 1e-12, [&] {
    const ForceResult q = force_quadrature(s, t, nodes, threads);
    const double ratio = std::abs(q.fx) > 0.0 ? std::abs(q.fy) / std::abs(q.fx) : std::abs(q.fy);
    return at_most("transverse_force", ratio, 1e-12, "|F_y|/|F_x| by quadrature");
  }));
  rep.checks.push_back(guarded("force_decomposition", 1e-15, [&] {
    const Complex total = force_analytic(s, t).fx;
    const Complex parts = force_buoyancy(s, t).fx + force_viscous_approx(s, t).fx;
    return at_most("force_decomposition", relative(parts, total), 1e-15,
                   "analytic vs buoyancy + viscous");
  }));
  return rep;
}

std::vector<SuiteReport> full_suite(const Scenario& s, unsigned threads) {
  return {boundary_suite(s), residual_suite(s, threads), force_suite(s, threads)};
}

}  // namespace oscylinder
