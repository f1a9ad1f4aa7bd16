#include <gtest/gtest.h>

#include <numbers>

#include "oscylinder/errors.hpp"
#include "oscylinder/verification.hpp"

namespace oscylinder {
namespace {

constexpr double pi = std::numbers::pi;

Scenario air(double a, double hertz, double v0 = 1.0, Perturbation p = {}) {
  return Scenario::at_frequency(Fluid::air20(), a, v0, hertz, p);
}

Scenario reference() { return air(1e-6, 100.0); }

const CheckResult* find(const SuiteReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

bool all_pass(const std::vector<SuiteReport>& reports) {
  for (const SuiteReport& r : reports) {
    if (!r.passed()) {
      return false;
    }
  }
  return true;
}

TEST(Residuals, SmallAtDefaultStep) {
  const Scenario s = reference();
  const double a = s.radius();
  for (double x : {1.1, 2.0, 7.0, 30.0, 100.0}) {
    for (double theta : {0.2, 1.0, 2.5}) {
      const PolarPoint pt{a * x, theta};
      const double h = 1e-4 * pt.r;
      EXPECT_LE(continuity_residual(s, pt, 0.0, h), 1e-7);
      EXPECT_LE(pressure_laplacian_residual(s, pt, 0.0, h), 1e-7);
      const MomentumResidual m = momentum_residual(s, pt, 0.0, h);
      EXPECT_LE(m.r, 1e-6);
      EXPECT_LE(m.theta, 1e-6);
    }
  }
}

TEST(Residuals, ZeroForZeroVelocity) {
  const Scenario s = air(1e-6, 100.0, 0.0);
  const ResidualReport rep = residuals(s, {3e-6, 0.4}, 0.0, 3e-10);
  for (double v : rep.value) {
    EXPECT_EQ(v, 0.0);
  }
}

TEST(Residuals, StepValidation) {
  const Scenario s = reference();
  const double a = s.radius();
  EXPECT_THROW(residuals(s, {1.00005 * a, 0.3}, 0.0, 1e-4 * a), StepError);
  EXPECT_THROW(residuals(s, {2.0 * a, 0.3}, 0.0, 0.0), StepError);
  EXPECT_THROW(residuals(s, {2.0 * a, 0.3}, 0.0, -1e-9), StepError);
  EXPECT_THROW(residuals(s, {0.9 * a, 0.3}, 0.0, 1e-10), DomainError);
  EXPECT_NO_THROW(residuals(s, {a, 0.3}, 0.0, 1e-4 * a, Stencil::one_sided_near_wall));
}

TEST(Residuals, OneSidedStencilAtTheWall) {
  for (double hz : {10.0, 1000.0}) {
    const Scenario s = air(1e-5, hz);
    const PolarPoint pt{s.radius(), 0.7};
    const ResidualReport rep = residuals(s, pt, 0.0, 1e-4 * pt.r, Stencil::one_sided_near_wall);
    for (Residual w : all_residuals) {
      EXPECT_LE(rep.at(w), 1e-6) << to_string(w);
    }
    const OrderReport order = estimate_order(s, pt, 0.0, 1e-4 * pt.r, Stencil::one_sided_near_wall);
    for (const auto& p : order.order) {
      if (p) {
        EXPECT_NEAR(*p, 2.0, 0.2);
      }
    }
  }
}

TEST(Residuals, SecondOrderConvergence) {
  const Scenario s = air(1e-5, 100.0);
  const PolarPoint pt{3e-5, 0.9};
  const OrderReport rep = estimate_order(s, pt, 0.0, 1e-4 * pt.r);
  int estimated = 0;
  for (const auto& p : rep.order) {
    if (p) {
      EXPECT_NEAR(*p, 2.0, 0.2);
      ++estimated;
    }
  }
  EXPECT_EQ(estimated, static_cast<int>(residual_count));
}

TEST(Residuals, HalvingTheStepQuartersTheResidual) {
  const Scenario s = air(1e-4, 1000.0);
  const PolarPoint pt{1.5e-4, 0.4};
  const double h = 1e-2 * pt.r;
  const ResidualReport coarse = residuals(s, pt, 0.0, h);
  const ResidualReport fine = residuals(s, pt, 0.0, 0.5 * h);
  for (Residual w : {Residual::continuity, Residual::momentum_r, Residual::momentum_theta,
                     Residual::pressure_laplacian}) {
    EXPECT_NEAR(coarse.at(w) / fine.at(w), 4.0, 0.4) << to_string(w);
  }
}

TEST(Residuals, DecoupledFormAgreesWithFullMomentum) {
  const Scenario s = reference();
  const PolarPoint pt{2.5e-6, 0.6};
  const ResidualReport rep = residuals(s, pt, 0.0, 1e-4 * pt.r);
  EXPECT_LE(rep.at(Residual::momentum_r_decoupled), 1e-6);
  EXPECT_LE(rep.at(Residual::continuity_expanded), 1e-7);
}

TEST(Suites, ReferenceScenarioPasses) {
  const std::vector<SuiteReport> reports = full_suite(reference(), 2);
  ASSERT_EQ(reports.size(), 3u);
  for (const SuiteReport& r : reports) {
    for (const CheckResult& c : r.checks) {
      EXPECT_TRUE(c.passed) << r.name << "/" << c.name << " " << c.value << " " << c.detail;
    }
  }
}

TEST(Suites, ParameterGridPasses) {
  for (double a : {1e-6, 1e-5, 1e-4}) {
    for (double hz : {10.0, 100.0, 1000.0}) {
      EXPECT_TRUE(all_pass(full_suite(air(a, hz), 2))) << a << " " << hz;
    }
  }
}

TEST(Suites, ZeroVelocityPassesTrivially) {
  EXPECT_TRUE(all_pass(full_suite(air(1e-6, 100.0, 0.0))));
}

TEST(Suites, PerturbedPressureCoefficientBreaksNoSlip) {
  Perturbation p;
  p.C = 1.001;
  const SuiteReport rep = boundary_suite(air(1e-6, 100.0, 1.0, p));
  const CheckResult* c = find(rep, "no_slip");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
}

TEST(Suites, EveryCoefficientMutationIsDetected) {
  for (int which = 0; which < 4; ++which) {
    Perturbation p;
    double& factor = which == 0 ? p.B : which == 1 ? p.C : which == 2 ? p.f_a : p.beta;
    factor = 1.001;
    EXPECT_FALSE(all_pass(full_suite(air(1e-6, 100.0, 1.0, p)))) << which;
  }
}

TEST(Suites, PerturbedBetaBreaksMomentum) {
  Perturbation p;
  p.beta = 1.001;
  const Scenario s = air(1e-5, 100.0, 1.0, p);
  EXPECT_TRUE(boundary_suite(s).passed());
  const SuiteReport rep = residual_suite(s);
  EXPECT_FALSE(find(rep, "momentum_r")->passed);
  EXPECT_FALSE(find(rep, "momentum_theta")->passed);
}

TEST(Suites, IndependentOfThreadCount) {
  const Scenario s = reference();
  const SuiteReport one = residual_suite(s, 1);
  const SuiteReport many = residual_suite(s, 5);
  ASSERT_EQ(one.checks.size(), many.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    EXPECT_EQ(one.checks[i].value, many.checks[i].value);
    EXPECT_EQ(one.checks[i].detail, many.checks[i].detail);
  }
}

TEST(Suites, ErrorsBecomeFailedChecks) {
  // beta a far beyond the representable range of K1: the force suite must
  // report, not throw.
  const Fluid fluid = Fluid::air20();
  const Scenario s(fluid, 1.0, 1.0, 1e12);
  EXPECT_NO_THROW({
    const SuiteReport rep = force_suite(s);
    (void)rep;
  });
  EXPECT_NO_THROW({
    const SuiteReport rep = boundary_suite(s);
    (void)rep;
  });
}

}  // namespace
}  // namespace oscylinder
