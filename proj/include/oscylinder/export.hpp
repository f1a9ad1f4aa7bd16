#pragma once
// CSV tables of profiles, pressure/velocity fields and forces, and the
// validation runner behind the command-line tool.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "oscylinder/scenario.hpp"

namespace oscylinder {

/// How a complex phasor is reduced to a real column.
enum class OutputMode { re, im, abs, phase };

/// Throws DomainError for anything but re, im, abs, phase.
OutputMode parse_mode(std::string_view text);
std::string_view to_string(OutputMode mode);
double reduce(Complex value, OutputMode mode);

/// Cartesian sampling box for field output.
struct FieldBox {
  double x_min;
  double x_max;
  double y_min;
  double y_max;
  int nx;
  int ny;
};

struct RunConfig {
  Fluid fluid = Fluid::air20();
  std::vector<double> radii{1e-6};         ///< [m]
  double v0 = 1.0;                         ///< [m/s]
  std::vector<double> frequencies{100.0};  ///< [Hz], strictly increasing
  OutputMode mode = OutputMode::abs;
  double t = 0.0;                  ///< [s]
  int profile_points = 200;        ///< log-spaced radii from a to r_max
  double r_max_factor = 1e4;       ///< r_max in units of a
  double box_factor = 5.0;         ///< default field box is [-5a, 5a]^2
  std::vector<double> box;         ///< explicit box x_min, x_max, y_min, y_max [m]
  int nx = 101;
  int ny = 101;
  int nodes = 512;                 ///< quadrature nodes for the force table
  unsigned threads = 0;            ///< 0: hardware concurrency
  Perturbation perturbation;       ///< debugging aid for `validate`
};

/// Throws DomainError naming the offending parameter.
void validate_config(const RunConfig& config);

/// Comma-separated positive numbers, returned sorted without duplicates.
std::vector<double> parse_list(std::string_view text, std::string_view parameter);
/// "lo:hi:n", n >= 2 points spaced evenly in log f from lo to hi inclusive.
std::vector<double> parse_frequency_range(std::string_view text);
std::vector<double> log_spaced(double lo, double hi, int n);
/// "key:factor[,key:factor...]" with keys B, C, f_a, beta.
Perturbation parse_mutation(std::string_view text);

/// Field box for radius a: the explicit one if given, else +-box_factor a.
FieldBox field_box(const RunConfig& config, double a);

/// Scientific notation with 17 significant digits.
std::string format_number(double value);

/// Columns a, f, r, r/a, v_r(r, 0)/v0, v_theta(r, pi/2)/v0; one block per
/// (a, f), radii log-spaced from a to r_max_factor a.
void write_profile_csv(std::ostream& out, const RunConfig& config);

/// Columns a, f, x, y, masked, Re p, |p|, Re v_x, Re v_y on the field box.
/// Rows inside the cylinder carry masked = 1 and empty field columns.
void write_field_csv(std::ostream& out, const RunConfig& config);

/// Columns a, f and the four force per unit length values over v0.
void write_force_csv(std::ostream& out, const RunConfig& config);

/// Runs the verification suites for every (a, f); prints one CSV row per
/// check and a summary line. Returns 0 if everything passed, else 1.
int run_validate(std::ostream& out, const RunConfig& config);

}  // namespace oscylinder
