#include "oscylinder/flow.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "oscylinder/errors.hpp"

namespace oscylinder {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const Complex imag_unit{0.0, 1.0};

void require_outside(const Scenario& s, double r) {
  if (!(r >= s.radius())) {
    throw DomainError("field evaluation requires r >= a");
  }
}

double wrap_angle(double theta) { return std::remainder(theta, two_pi); }

// K1(kappa x)/K1(kappa), K0(kappa x)/K1(kappa) and the combination
// K1(kappa x)/(K1(kappa) x) - 1/x^2, which cancels badly near the wall when
// |kappa| is small and is therefore rewritten through K1(z) - 1/z there.
struct BesselRatios {
  Complex q;
  Complex p;
  Complex bracket;
};

BesselRatios bessel_ratios(const SolutionCoefficients& c, double x) {
  BesselRatios out;
  if (x == 1.0) {
    out.q = 1.0;
    out.p = c.k0_a_scaled / c.k1_a_scaled;
    out.bracket = 0.0;
    return out;
  }
  const Complex z = c.kappa * x;
  if (std::abs(z) <= 2.0) {
    const bessel::KPair k = bessel::k01(z);
    out.q = k.k1 / c.k1_a;
    out.p = k.k0 / c.k1_a;
    out.bracket = (x * bessel::k1_regular(z) - c.k1_a_regular) / (c.k1_a * x * x);
    return out;
  }
  const bessel::KPair k = bessel::k01(z, bessel::Scaling::exponential);
  const Complex decay = std::exp(-c.kappa * (x - 1.0));
  out.q = k.k1 / c.k1_a_scaled * decay;
  out.p = k.k0 / c.k1_a_scaled * decay;
  out.bracket = out.q / x - 1.0 / (x * x);
  return out;
}

}  // namespace

Complex coefficient_C(const Scenario& s) {
  const SolutionCoefficients& c = s.coefficients();
  const double a = s.radius();
  return imag_unit * s.fluid().rho0 * a * a * s.omega() * s.v0() * (1.0 + c.d_c);
}

Complex coefficient_B(const Scenario& s) {
  const SolutionCoefficients& c = s.coefficients();
  const Complex k1_a = c.k1_a_scaled * std::exp(-c.kappa);
  if (std::abs(k1_a) < std::numeric_limits<double>::min()) {
    throw RangeError("coefficient B overflows: K1(j- beta a) underflows");
  }
  return s.fluid().rho0 * s.omega() * s.v0() * s.radius() * c.d_b / k1_a;
}

Complex f_of_r(const Scenario& s, double r) {
  require_outside(s, r);
  const SolutionCoefficients& c = s.coefficients();
  const double x = r / s.radius();
  if (x == 1.0) {
    return c.f_a;
  }
  const Complex k1 = bessel::k1(c.kappa * x, bessel::Scaling::exponential);
  return c.f_a * (k1 / c.k1_a_scaled) * std::exp(-c.kappa * (x - 1.0));
}

RadialProfile radial_profile(const Scenario& s, double r) {
  require_outside(s, r);
  const SolutionCoefficients& c = s.coefficients();
  const double x = r / s.radius();
  const BesselRatios b = bessel_ratios(c, x);
  const double x2 = x * x;
  const double x3 = x2 * x;
  // Differences d_b - d_c vanish exactly for the unperturbed solution; keeping
  // them separate leaves only O(1) terms at the wall.
  const Complex delta = c.d_b - c.d_c;
  const Complex kp = c.kappa * b.p;

  RadialProfile out;
  out.vr = 1.0 - 1.0 / x2 + delta / x2 + c.d_b * b.bracket;
  out.vtheta = -1.0 - 1.0 / x2 + delta / x2 + c.d_b * (kp + b.bracket);
  // d/dx Q = -kappa P - Q/x and d/dx P = -kappa Q.
  out.dvr = 2.0 / x3 - 2.0 * delta / x3 - c.d_b * (kp / x + 2.0 * b.bracket / x);
  out.dvtheta = 2.0 / x3 - 2.0 * delta / x3 -
                c.d_b * (c.kappa * c.kappa * b.q + kp / x + 2.0 * b.bracket / x);
  return out;
}

namespace {

FlowState assemble(const Scenario& s, double r, double cos_t, double sin_t, double t) {
  const RadialProfile prof = radial_profile(s, r);
  const Complex phase = s.phase(t);
  const double x = r / s.radius();
  const Complex p_radial = imag_unit * (x + (1.0 + s.coefficients().d_c) / x);
  const double p_scale = s.fluid().rho0 * s.omega() * s.v0() * s.radius();
  return {(s.v0() * cos_t) * prof.vr * phase, (s.v0() * sin_t) * prof.vtheta * phase,
          (p_scale * cos_t) * p_radial * phase};
}

}  // namespace

Velocity velocity(const Scenario& s, PolarPoint pt, double t) {
  const FlowState st = flow_state(s, pt, t);
  return {st.vr, st.vtheta};
}

Complex pressure(const Scenario& s, PolarPoint pt, double t) { return flow_state(s, pt, t).p; }

FlowState flow_state(const Scenario& s, PolarPoint pt, double t) {
  const double theta = wrap_angle(pt.theta);
  return assemble(s, pt.r, std::cos(theta), std::sin(theta), t);
}

FlowState flow_state_at(const Scenario& s, double x, double y, double t) {
  const double r = std::hypot(x, y);
  require_outside(s, r);
  return assemble(s, r, x / r, y / r, t);
}

CartesianVector to_cartesian(const Velocity& v, double cos_theta, double sin_theta) {
  return {v.vr * cos_theta - v.vtheta * sin_theta, v.vr * sin_theta + v.vtheta * cos_theta};
}

CartesianVector far_field_velocity(const Scenario& s, double t) {
  return {s.v0() * s.phase(t), Complex{0.0}};
}

Complex far_field_pressure(const Scenario& s, double x, double t) {
  return imag_unit * (x * s.fluid().rho0 * s.omega() * s.v0()) * s.phase(t);
}

double reynolds_number(const Scenario& s) { return s.v0() * s.radius() / s.fluid().nu0; }

ValidityReport validity_report(const Scenario& s) {
  ValidityReport rep{};
  rep.reynolds = reynolds_number(s);
  rep.beta_a = s.beta_a();
  rep.boundary_layer_thickness = std::sqrt(2.0 * s.fluid().nu0 / s.omega());
  try {
    rep.recovery_radius_90 = recovery_radius(s, 0.9);
  } catch (const NotFoundError&) {
    rep.recovery_radius_90.reset();
  }
  rep.warn_nonlinear = rep.reynolds >= 0.1;
  rep.warn_long_range =
      !rep.recovery_radius_90 || *rep.recovery_radius_90 > 1e3 * s.radius();
  return rep;
}

double recovery_radius(const Scenario& s, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw DomainError("recovery fraction must lie in (0, 1)");
  }
  constexpr int grid_points = 2001;
  constexpr double decades = 6.0;
  const double a = s.radius();
  auto level = [&](double x) { return std::abs(radial_profile(s, a * x).vr); };

  std::vector<double> grid(grid_points);
  int last_below = -1;
  for (int i = 0; i < grid_points; ++i) {
    grid[i] = std::pow(10.0, decades * i / (grid_points - 1));
    if (level(grid[i]) < fraction) {
      last_below = i;
    }
  }
  if (last_below == grid_points - 1) {
    throw NotFoundError("velocity does not recover to the requested fraction within 1e6 a");
  }
  double lo = grid[last_below];
  double hi = grid[last_below + 1];
  while ((hi - lo) > 1e-12 * lo) {
    const double mid = 0.5 * (lo + hi);
    if (level(mid) < fraction) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return a * hi;
}

}  // namespace oscylinder
