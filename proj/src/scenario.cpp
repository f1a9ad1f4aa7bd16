#include "oscylinder/scenario.hpp"

#include <cmath>
#include <string>

#include "oscylinder/errors.hpp"

namespace oscylinder {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw DomainError(what);
  }
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

Scenario::Scenario(Fluid fluid, double radius, double v0, double omega, Perturbation perturbation)
    : fluid_(fluid), radius_(radius), v0_(v0), omega_(omega), perturbation_(perturbation) {
  require(finite_positive(fluid.nu0), "nu0 must be positive and finite");
  require(finite_positive(fluid.rho0), "rho0 must be positive and finite");
  require(finite_positive(radius), "cylinder radius a must be positive and finite");
  require(std::isfinite(v0) && v0 >= 0.0, "v0 must be non-negative and finite");
  require(finite_positive(omega),
          "omega must be positive (the steady problem has no bounded solution)");
  require(finite_positive(perturbation.B) && finite_positive(perturbation.C) &&
              finite_positive(perturbation.f_a) && finite_positive(perturbation.beta),
          "perturbation factors must be positive");

  beta_ = std::sqrt(omega / fluid.nu0) * perturbation.beta;

  SolutionCoefficients& c = coeff_;
  c.kappa = j_minus * (beta_ * radius_);
  const bessel::KPair ka = bessel::k01(c.kappa, bessel::Scaling::exponential);
  c.k0_a_scaled = ka.k0;
  c.k1_a_scaled = ka.k1;
  if (std::abs(c.kappa) <= 2.0) {
    c.k1_a = bessel::k1(c.kappa);
    c.k1_a_regular = bessel::k1_regular(c.kappa);
  }
  c.f_a = perturbation.f_a * (2.0 * j_plus * ka.k1 / ka.k0);
  const Complex d = c.f_a / (beta_ * radius_);
  // Written so that an identity perturbation gives d_c == d_b bit for bit.
  c.d_c = d + (perturbation.C - 1.0) * (1.0 + d);
  c.d_b = perturbation.B * d;
}

}  // namespace oscylinder
