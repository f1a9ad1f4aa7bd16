// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oscylinder/bessel.hpp"
#include "oscylinder/export.hpp"
#include "oscylinder/flow.hpp"
#include "oscylinder/stress.hpp"
#include "oscylinder/verification.hpp"

namespace {

using namespace oscylinder;

constexpr double pi = std::numbers::pi;
const std::vector<double> radii{1e-6, 1e-5, 1e-4};
const std::vector<double> frequencies{10.0, 100.0, 1000.0};

struct Outcome {
  bool passed;
  std::string detail;
};

Scenario air(double a, double hertz, Perturbation p = {}) {
  return Scenario::at_frequency(Fluid::air20(), a, 1.0, hertz, p);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

const CheckResult& check(const SuiteReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks) {
    if (c.name == name) {
      return c;
    }
  }
  static const CheckResult missing{"missing", false, NAN, 0.0, "check not found"};
  return missing;
}

Outcome no_slip(Perturbation p = {}) {
  bool ok = true;
  double worst = 0.0;
  for (double a : radii) {
    for (double f : frequencies) {
      const CheckResult& c = check(boundary_suite(air(a, f, p)), "no_slip");
      ok = ok && c.passed;
      worst = std::max(worst, c.value);
    }
  }
  return {ok, "max |v(a)|/v0 = " + sci(worst) + " (limit 1e-12)"};
}

Outcome pde_residuals(Perturbation p = {}) {
  bool ok = true;
  double worst = 0.0;
  std::string order;
  for (double a : radii) {
    for (double f : frequencies) {
      const SuiteReport rep = residual_suite(air(a, f, p), 0);
      for (const CheckResult& c : rep.checks) {
        ok = ok && c.passed;
        if (c.name == "convergence_order") {
          if (order.empty() || !c.passed) {
            order = c.detail;
          }
        } else if (c.name != "continuity_forms_agree") {
          worst = std::max(worst, c.value);
        }
      }
    }
  }
  return {ok, "max normalized residual = " + sci(worst) + " (limit 1e-6); " + order};
}

Outcome force_equivalence(Perturbation p = {}) {
  bool ok = true;
  double rel = 0.0;
  double transverse = 0.0;
  for (double a : radii) {
    for (double f : frequencies) {
      const SuiteReport rep = force_suite(air(a, f, p), 0);
      const CheckResult& q = check(rep, "quadrature_vs_analytic");
      const CheckResult& y = check(rep, "transverse_force");
      ok = ok && q.passed && y.passed;
      rel = std::max(rel, q.value);
      transverse = std::max(transverse, y.value);
    }
  }
  return {ok, "max rel. deviation = " + sci(rel) + " (limit 1e-9), max |F_y|/|F_x| = " +
                  sci(transverse) + " (limit 1e-12)"};
}

Outcome decomposition() {
  bool ok = true;
  double worst = 0.0;
  for (double a : radii) {
    for (double f : frequencies) {
      const CheckResult& c = check(force_suite(air(a, f)), "force_decomposition");
      ok = ok && c.passed;
      worst = std::max(worst, c.value);
    }
  }
  return {ok, "max rel. deviation = " + sci(worst) + " (limit 1e-15)"};
}

Outcome bessel_kernel() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> log_mod(std::log(1e-3), std::log(30.0));
  std::uniform_real_distribution<double> arg(-pi / 2, pi / 2);
  double wronskian = 0.0;
  double derivative = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Complex z = std::polar(std::exp(log_mod(rng)), arg(rng));
    const bessel::KPair k = bessel::k01(z);
    const Complex w = bessel::i0(z) * k.k1 + bessel::i1(z) * k.k0;
    wronskian = std::max(wronskian, std::abs(w * z - 1.0));
    const Complex h = 1e-5 * std::abs(z);
    const bessel::KPair kp = bessel::k01(z + h);
    const bessel::KPair km = bessel::k01(z - h);
    const Complex dk0 = (kp.k0 - km.k0) / (2.0 * h);
    const Complex dk1 = (kp.k1 - km.k1) / (2.0 * h);
    derivative = std::max({derivative, std::abs(dk0 + k.k1) / std::abs(k.k1),
                           std::abs(dk1 + k.k0 + k.k1 / z) / std::abs(k.k0 + k.k1 / z)});
  }
  return {wronskian <= 1e-12 && derivative <= 1e-7,
          "Wronskian rel. error = " + sci(wronskian) + " (limit 1e-12), derivative rel. error = " +
              sci(derivative) + " (limit 1e-7)"};
}

Outcome azimuthal_overshoot() {
  const Scenario s = air(1e-6, 10.0);
  double peak = 0.0;
  double at = 0.0;
  for (int i = 1; i <= 4000; ++i) {
    const double r = 1e-6 * std::pow(10.0, 4.0 * i / 4000.0);
    const double v = std::abs(velocity(s, {r, pi / 2}, 0.0).vtheta);
    if (v > peak) {
      peak = v;
      at = r;
    }
  }
  return {peak > 1.0, "max |v_theta(r, pi/2)|/v0 = " + sci(peak) + " at r = " + sci(at) + " m"};
}

Outcome recovery_ordering() {
  std::vector<double> r;
  for (double f : frequencies) {
    r.push_back(recovery_radius(air(1e-6, f), 0.9));
  }
  return {r[0] > r[1] && r[1] > r[2],
          "r_90 = " + sci(r[0]) + ", " + sci(r[1]) + ", " + sci(r[2]) + " m at 10, 100, 1000 Hz"};
}

Outcome force_shape() {
  const std::vector<double> f = log_spaced(100.0, 1000.0, 10);
  bool increasing = true;
  double previous = 0.0;
  double ratio = 0.0;
  for (double hz : f) {
    const double mag = std::abs(force_analytic(air(1e-5, hz), 0.0).fx);
    increasing = increasing && mag > previous;
    previous = mag;
    const Scenario small = air(1e-6, hz);
    ratio = std::max(ratio, std::abs(force_buoyancy(small, 0.0).fx) /
                                std::abs(force_analytic(small, 0.0).fx));
  }
  return {increasing && ratio < 0.1,
          std::string("|F| increasing for a = 1e-5 m: ") + (increasing ? "yes" : "no") +
              "; max |F_p|/|F| for a = 1e-6 m = " + sci(ratio) + " (limit 0.1)"};
}

Outcome mutation_sensitivity() {
  const char* names[] = {"B", "C", "f_a", "beta"};
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 4; ++k) {
    Perturbation p;
    double& factor = k == 0 ? p.B : k == 1 ? p.C : k == 2 ? p.f_a : p.beta;
    factor = 1.001;
    const bool c1 = no_slip(p).passed;
    const bool c2 = pde_residuals(p).passed;
    const bool c3 = force_equivalence(p).passed;
    const bool detected = !(c1 && c2 && c3);
    ok = ok && detected;
    detail += std::string(k ? "; " : "") + names[k] + " x1.001 breaks";
    detail += c1 ? "" : " 1";
    detail += c2 ? "" : " 2";
    detail += c3 ? "" : " 3";
    if (!detected) {
      detail += " nothing";
    }
  }
  return {ok, detail};
}

Outcome determinism() {
  RunConfig c;
  c.radii = {1e-6, 1e-5, 1e-4};
  c.frequencies = log_spaced(1.0, 1e4, 200);
  auto render = [&](unsigned threads) {
    c.threads = threads;
    std::ostringstream out;
    write_force_csv(out, c);
    return out.str();
  };
  const std::string first = render(1);
  const bool same = first == render(1) && first == render(4) && first == render(0);
  return {same, std::to_string(first.size()) + " bytes, identical across runs and thread counts"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"no-slip on the (a, f) grid", [] { return no_slip(); }},
      {"PDE residuals and convergence order", [] { return pde_residuals(); }},
      {"force quadrature vs closed form", [] { return force_equivalence(); }},
      {"exact buoyancy/viscous decomposition", decomposition},
      {"Bessel Wronskian and derivative identities", bessel_kernel},
      {"azimuthal velocity exceeds v0 (10 Hz)", azimuthal_overshoot},
      {"recovery radius decreases with frequency", recovery_ordering},
      {"force growth and buoyancy share", force_shape},
      {"coefficient mutations are detected", mutation_sensitivity},
      {"force table determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].name,
                o.detail.c_str());
  }
  std::printf("%s: %zu of %zu criteria passed\n", failed ? "FAIL" : "PASS",
              criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
