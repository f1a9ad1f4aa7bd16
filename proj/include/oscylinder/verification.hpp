#pragma once
// Black-box checks of the closed-form fields: finite-difference residuals of
// the governing equations, boundary and symmetry checks, force consistency.
// Only the public field and force operations are used here.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oscylinder/flow.hpp"

namespace oscylinder {

/// Radial stencil policy. `central` throws StepError when r - h < a;
/// `one_sided_near_wall` switches to second-order forward differences there.
enum class Stencil { central, one_sided_near_wall };

/// Residual components. Each is made dimensionless with a fixed scale:
///   continuity, continuity_expanded:       v0/a
///   momentum_r, momentum_theta,
///   momentum_r_decoupled:                  v0 (omega + nu0/a^2)
///   pressure_laplacian:                    rho0 v0 (omega + nu0/a^2)/a
enum class Residual {
  continuity,            ///< (1/r) d_r(r v_r) + (1/r) d_theta v_theta
  continuity_expanded,   ///< d_r v_r + v_r/r + (1/r) d_theta v_theta
  momentum_r,
  momentum_theta,
  momentum_r_decoupled,  ///< v_r-only form with the pressure eliminated through C
  pressure_laplacian,
};

inline constexpr std::size_t residual_count = 6;
inline constexpr std::array<Residual, residual_count> all_residuals{
    Residual::continuity,           Residual::continuity_expanded,
    Residual::momentum_r,           Residual::momentum_theta,
    Residual::momentum_r_decoupled, Residual::pressure_laplacian};

std::string_view to_string(Residual which);

struct ResidualReport {
  PolarPoint location;
  double step;  ///< radial step h [m]; the angular step is h/r
  std::array<double, residual_count> value;  ///< normalized residual magnitudes
  std::array<double, residual_count> floor;  ///< estimated rounding level, same scale
  [[nodiscard]] double at(Residual which) const { return value[static_cast<std::size_t>(which)]; }
};

/// All residuals at one point. The time derivative is exact (-i omega times the
/// phasor); spatial derivatives are second-order finite differences with radial
/// step h and angular step h/r. Throws StepError for h <= 0 or when the central
/// stencil would cross r = a, DomainError for r < a.
ResidualReport residuals(const Scenario& s, PolarPoint pt, double t, double h,
                         Stencil stencil = Stencil::central);

double continuity_residual(const Scenario& s, PolarPoint pt, double t, double h,
                           Stencil stencil = Stencil::central);

struct MomentumResidual {
  double r;
  double theta;
};
MomentumResidual momentum_residual(const Scenario& s, PolarPoint pt, double t, double h,
                                   Stencil stencil = Stencil::central);

double pressure_laplacian_residual(const Scenario& s, PolarPoint pt, double t, double h,
                                   Stencil stencil = Stencil::central);

/// Observed convergence order p = log2(|R(H) - R(H/2)| / |R(H/2) - R(H/4)|).
/// H starts at `h` and is doubled until all three residuals stand at least a
/// factor 100 above their rounding level. Components that never get there are
/// left empty (they are zero to working precision).
struct OrderReport {
  std::array<std::optional<double>, residual_count> order;
  std::array<double, residual_count> step{};  ///< H used for each estimate
};
OrderReport estimate_order(const Scenario& s, PolarPoint pt, double t, double h,
                           Stencil stencil = Stencil::central);

struct CheckResult {
  std::string name;
  bool passed;
  double value;  ///< measured quantity (a maximum error, usually)
  double limit;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const;
};

/// No-slip on 64 angles x 4 times, far-field velocity at max(1e3 a, 20 delta),
/// far-field pressure at 1e6 a, angular structure of p and the parity of all
/// fields. Failures, including thrown errors, are reported, never rethrown.
SuiteReport boundary_suite(const Scenario& s);

/// Residuals at h = 1e-4 r on a 5 x 5 grid, r in [1.1 a, 100 a], and their
/// observed convergence order.
SuiteReport residual_suite(const Scenario& s, unsigned threads = 1);

/// Quadrature (512 nodes) against the closed-form force, vanishing F_y, and
/// the buoyancy/viscous split.
SuiteReport force_suite(const Scenario& s, unsigned threads = 1);

std::vector<SuiteReport> full_suite(const Scenario& s, unsigned threads = 1);

}  // namespace oscylinder
