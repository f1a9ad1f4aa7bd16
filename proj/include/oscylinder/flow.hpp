#pragma once

// Closed-form phasor fields around the cylinder. Every field carries the time
// factor e^{-i omega t}; the physical field is the real part.

#include <optional>

#include "oscylinder/scenario.hpp"

namespace oscylinder {

/// Polar position; theta is measured from the flow direction (x axis).
struct PolarPoint {
  double r;      ///< [m]
  double theta;  ///< [rad], any real value
};

struct Velocity {
  Complex vr;      ///< [m/s]
  Complex vtheta;  ///< [m/s]
};

struct FlowState {
  Complex vr;      ///< [m/s]
  Complex vtheta;  ///< [m/s]
  Complex p;       ///< [Pa]
};

/// Complex Cartesian vector (phasor components along x and y).
struct CartesianVector {
  Complex x;
  Complex y;
};

/// Dimensionless radial profiles and their derivatives with respect to r/a:
/// v_r = v0 cos(theta) vr e^{-i omega t}, v_theta = v0 sin(theta) vtheta e^{-i omega t}.
struct RadialProfile {
  Complex vr;
  Complex vtheta;
  Complex dvr;
  Complex dvtheta;
};

/// C = i rho0 a^2 omega v0 (1 + (2 j+/(beta a)) K1(j- beta a)/K0(j- beta a)) [Pa m].
Complex coefficient_C(const Scenario& s);

/// B = -(rho0 a^2 omega v0 + i C)/(a K1(j- beta a)). Throws RangeError when
/// K1(j- beta a) underflows (beta a of order 1e3 and beyond).
Complex coefficient_B(const Scenario& s);

/// f(r) = 2 j+ K1(j- beta r)/K0(j- beta a), evaluated as a ratio of scaled
/// Bessel functions times e^{-j- beta (r - a)}. Requires r >= a.
Complex f_of_r(const Scenario& s, double r);

/// Throws DomainError for r < a.
RadialProfile radial_profile(const Scenario& s, double r);

Velocity velocity(const Scenario& s, PolarPoint pt, double t);
Complex pressure(const Scenario& s, PolarPoint pt, double t);
FlowState flow_state(const Scenario& s, PolarPoint pt, double t);

/// Fields at Cartesian (x, y), using cos(theta) = x/r and sin(theta) = y/r so
/// that mirror images are exact. Requires hypot(x, y) >= a.
FlowState flow_state_at(const Scenario& s, double x, double y, double t);

/// Polar velocity components rotated to Cartesian (x, y).
CartesianVector to_cartesian(const Velocity& v, double cos_theta, double sin_theta);

/// v0 (1, 0) e^{-i omega t}
CartesianVector far_field_velocity(const Scenario& s, double t);

/// i x rho0 omega v0 e^{-i omega t}
Complex far_field_pressure(const Scenario& s, double x, double t);

/// v0 a / nu0
double reynolds_number(const Scenario& s);

struct ValidityReport {
  double reynolds;
  double beta_a;
  double boundary_layer_thickness;  ///< sqrt(2 nu0/omega) [m]
  std::optional<double> recovery_radius_90;  ///< empty if not reached within 1e6 a
  bool warn_nonlinear;   ///< Re >= 0.1
  bool warn_long_range;  ///< 90 % recovery radius beyond 1e3 a (or not found)
};

ValidityReport validity_report(const Scenario& s);

/// Smallest r >= a beyond which |v_r(r, 0)|/v0 stays at or above `fraction`
/// on a log grid out to 1e6 a, refined by bisection. Throws DomainError unless
/// 0 < fraction < 1 and NotFoundError if the level is not reached.
double recovery_radius(const Scenario& s, double fraction);

}  // namespace oscylinder
