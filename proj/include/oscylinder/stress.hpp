#pragma once

// Stress tensor, surface traction and force per unit length on the cylinder.

#include <string_view>

#include "oscylinder/flow.hpp"

namespace oscylinder {

/// Symmetric polar stress tensor [Pa]; pi_thetar is pi_rtheta.
struct StressTensor {
  Complex rr;
  Complex rtheta;
  Complex thetatheta;

  [[nodiscard]] Complex thetar() const { return rtheta; }
};

enum class ForceMethod { analytic, buoyancy, viscous_approx, quadrature };

std::string_view to_string(ForceMethod method);

/// Force per unit cylinder length [N/m] as complex phasors including e^{-i omega t}.
struct ForceResult {
  Complex fx;
  Complex fy;
  ForceMethod method;
  int nodes = 0;  ///< quadrature nodes, 0 for closed forms
};

/// Stress from the analytic radial derivatives of the velocity profiles.
/// Throws DomainError for r < a.
StressTensor stress_tensor(const Scenario& s, PolarPoint pt, double t);

/// Traction Pi n on the cylinder surface r = a, n = (cos theta, sin theta),
/// returned in Cartesian components.
CartesianVector traction(const Scenario& s, double theta, double t);

/// F_x = -2 pi i rho0 v0 omega a (a + f(a)/beta) e^{-i omega t}, F_y = 0.
ForceResult force_analytic(const Scenario& s, double t);

/// Viscosity-independent part F_p = -2 pi i rho0 v0 omega a^2 e^{-i omega t}.
ForceResult force_buoyancy(const Scenario& s, double t);

/// Viscous part -2 pi i rho0 v0 omega a f(a)/beta e^{-i omega t}.
ForceResult force_viscous_approx(const Scenario& s, double t);

/// Periodic trapezoidal rule for the surface integral of the traction with
/// `nodes` equally spaced angles (nodes >= 8, otherwise DomainError). Node
/// values may be computed on several threads; the sum is pairwise in node
/// order, so the result does not depend on `threads`.
ForceResult force_quadrature(const Scenario& s, double t, int nodes, unsigned threads = 1);

}  // namespace oscylinder
