#pragma once

#include <complex>
#include <numbers>

#include "oscylinder/bessel.hpp"

namespace oscylinder {

/// j+ = (1 + i)/sqrt(2) and j- = (1 - i)/sqrt(2); j+ j- = 1, (j-)^2 = -i.
inline const Complex j_plus{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
inline const Complex j_minus{std::numbers::sqrt2 / 2.0, -std::numbers::sqrt2 / 2.0};

/// Newtonian fluid, SI units. The dynamic viscosity is always rho0 * nu0.
struct Fluid {
  double nu0;   ///< kinematic viscosity [m^2/s]
  double rho0;  ///< density [kg/m^3]

  [[nodiscard]] double mu0() const { return rho0 * nu0; }

  /// Dry air at 20 C and 1013 hPa.
  static Fluid air20() { return {15.11e-6, 1.204}; }
};

/// Multiplicative perturbation of the solution coefficients. Only used to show
/// that the verification checks detect a broken coefficient chain; the
/// default is the identity.
struct Perturbation {
  double B = 1.0;
  double C = 1.0;
  double f_a = 1.0;
  double beta = 1.0;

  [[nodiscard]] bool is_identity() const {
    return B == 1.0 && C == 1.0 && f_a == 1.0 && beta == 1.0;
  }
};

/// Dimensionless coefficients of the closed-form fields. With r in units of a,
/// kappa = j- beta a and D = f(a)/(beta a):
///
///   v_r/v0          = cos(theta) [1 - (1 + d_c)/r^2 + d_b K1(kappa r)/(K1(kappa) r)]
///   v_theta/v0      = sin(theta) [-1 - (1 + d_c)/r^2
///                                 + d_b (kappa K0(kappa r) + K1(kappa r)/r)/K1(kappa)]
///   p/(rho0 omega v0 a) = i cos(theta) [r + (1 + d_c)/r]
///
/// times e^{-i omega t}. Unperturbed, d_c = d_b = D.
struct SolutionCoefficients {
  Complex kappa;        ///< j- beta a
  Complex k0_a_scaled;  ///< exp(kappa) K0(kappa)
  Complex k1_a_scaled;  ///< exp(kappa) K1(kappa)
  Complex k1_a;         ///< K1(kappa); only meaningful when |kappa| <= 2
  Complex k1_a_regular; ///< K1(kappa) - 1/kappa; only meaningful when |kappa| <= 2
  Complex f_a;          ///< f(a) = 2 j+ K1(kappa)/K0(kappa)
  Complex d_c;          ///< iC/(rho0 omega v0 a^2) = -(1 + d_c)
  Complex d_b;          ///< B = rho0 omega v0 a d_b / K1(kappa)
};

/// Cylinder of radius a in a fluid whose far-field velocity is v0 e^{-i omega t} along x.
/// Immutable; all Bessel work that depends only on the scenario is done once here.
class Scenario {
 public:
  /// Throws DomainError unless a > 0, v0 >= 0, omega > 0, nu0 > 0, rho0 > 0 (all finite).
  Scenario(Fluid fluid, double radius, double v0, double omega, Perturbation perturbation = {});

  static Scenario at_frequency(Fluid fluid, double radius, double v0, double hertz,
                               Perturbation perturbation = {}) {
    return Scenario(fluid, radius, v0, 2.0 * std::numbers::pi * hertz, perturbation);
  }

  [[nodiscard]] const Fluid& fluid() const { return fluid_; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] double v0() const { return v0_; }
  [[nodiscard]] double omega() const { return omega_; }
  [[nodiscard]] double frequency() const { return omega_ / (2.0 * std::numbers::pi); }
  [[nodiscard]] double period() const { return 2.0 * std::numbers::pi / omega_; }
  /// Inverse viscous length sqrt(omega/nu0) [1/m] (times the beta perturbation, if any).
  [[nodiscard]] double beta() const { return beta_; }
  [[nodiscard]] double beta_a() const { return beta_ * radius_; }
  [[nodiscard]] const Perturbation& perturbation() const { return perturbation_; }
  [[nodiscard]] const SolutionCoefficients& coefficients() const { return coeff_; }

  /// e^{-i omega t}
  [[nodiscard]] Complex phase(double t) const { return std::polar(1.0, -omega_ * t); }

 private:
  Fluid fluid_;
  double radius_;
  double v0_;
  double omega_;
  double beta_;
  Perturbation perturbation_;
  SolutionCoefficients coeff_;
};

}  // namespace oscylinder
