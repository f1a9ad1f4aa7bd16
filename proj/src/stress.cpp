#include "oscylinder/stress.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "oscylinder/errors.hpp"
#include "oscylinder/numerics.hpp"

namespace oscylinder {
namespace {

const Complex imag_unit{0.0, 1.0};

StressTensor stress_from_angles(const Scenario& s, double r, double cos_t, double sin_t,
                                double t) {
  if (!(r >= s.radius())) {
    throw DomainError("stress evaluation requires r >= a");
  }
  const RadialProfile prof = radial_profile(s, r);
  const double x = r / s.radius();
  const Complex phase = s.phase(t);
  // Velocity gradients in units of v0/a.
  const Complex vr = cos_t * prof.vr;
  const Complex vtheta = sin_t * prof.vtheta;
  const Complex dvr_dr = cos_t * prof.dvr;
  const Complex dvtheta_dr = sin_t * prof.dvtheta;
  const Complex dvr_dtheta = -sin_t * prof.vr;
  const Complex dvtheta_dtheta = cos_t * prof.vtheta;

  const double viscous = s.fluid().mu0() * s.v0() / s.radius();
  const double p_scale = s.fluid().rho0 * s.omega() * s.v0() * s.radius();
  const Complex p = (p_scale * cos_t) * imag_unit * (x + (1.0 + s.coefficients().d_c) / x);

  StressTensor out;
  out.rr = (-p + 2.0 * viscous * dvr_dr) * phase;
  out.rtheta = viscous * (dvr_dtheta / x + dvtheta_dr - vtheta / x) * phase;
  out.thetatheta = (-p + 2.0 * viscous * (dvtheta_dtheta / x + vr / x)) * phase;
  return out;
}

CartesianVector traction_from_angles(const Scenario& s, double cos_t, double sin_t, double t) {
  const StressTensor st = stress_from_angles(s, s.radius(), cos_t, sin_t, t);
  // Polar traction (pi_rr, pi_rtheta) rotated to Cartesian axes.
  return {st.rr * cos_t - st.rtheta * sin_t, st.rr * sin_t + st.rtheta * cos_t};
}

Complex force_prefactor(const Scenario& s, double t) {
  return -2.0 * std::numbers::pi * imag_unit * s.fluid().rho0 * s.v0() * s.omega() *
         s.radius() * s.phase(t);
}

}  // namespace

std::string_view to_string(ForceMethod method) {
  switch (method) {
    case ForceMethod::analytic:
      return "analytic";
    case ForceMethod::buoyancy:
      return "buoyancy";
    case ForceMethod::viscous_approx:
      return "viscous_approx";
    case ForceMethod::quadrature:
      return "quadrature";
  }
  return "unknown";
}

StressTensor stress_tensor(const Scenario& s, PolarPoint pt, double t) {
  const double theta = std::remainder(pt.theta, 2.0 * std::numbers::pi);
  return stress_from_angles(s, pt.r, std::cos(theta), std::sin(theta), t);
}

CartesianVector traction(const Scenario& s, double theta, double t) {
  const double wrapped = std::remainder(theta, 2.0 * std::numbers::pi);
  return traction_from_angles(s, std::cos(wrapped), std::sin(wrapped), t);
}

ForceResult force_analytic(const Scenario& s, double t) {
  const Complex fa = s.coefficients().f_a;
  return {force_prefactor(s, t) * (s.radius() + fa / s.beta()), Complex{0.0},
          ForceMethod::analytic};
}

ForceResult force_buoyancy(const Scenario& s, double t) {
  return {force_prefactor(s, t) * s.radius(), Complex{0.0}, ForceMethod::buoyancy};
}

ForceResult force_viscous_approx(const Scenario& s, double t) {
  const Complex fa = s.coefficients().f_a;
  return {force_prefactor(s, t) * (fa / s.beta()), Complex{0.0}, ForceMethod::viscous_approx};
}

ForceResult force_quadrature(const Scenario& s, double t, int nodes, unsigned threads) {
  if (nodes < 8) {
    throw DomainError("force quadrature needs at least 8 nodes");
  }
  const auto n = static_cast<std::size_t>(nodes);
  std::vector<Complex> fx(n);
  std::vector<Complex> fy(n);
  const double step = 2.0 * std::numbers::pi / nodes;
  parallel_for(n, threads, [&](std::size_t j) {
    const double theta = step * static_cast<double>(j);
    const CartesianVector f = traction_from_angles(s, std::cos(theta), std::sin(theta), t);
    fx[j] = f.x;
    fy[j] = f.y;
  });
  const double weight = step * s.radius();
  return {weight * pairwise_sum<Complex>(fx), weight * pairwise_sum<Complex>(fy),
          ForceMethod::quadrature, nodes};
}

}  // namespace oscylinder
