#include "oscylinder/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "oscylinder/errors.hpp"
#include "oscylinder/flow.hpp"
#include "oscylinder/numerics.hpp"
#include "oscylinder/stress.hpp"
#include "oscylinder/verification.hpp"

namespace oscylinder {
namespace {

[[noreturn]] void invalid(std::string_view parameter, const std::string& why) {
  throw DomainError("invalid " + std::string(parameter) + ": " + why);
}

double parse_number(std::string_view text, std::string_view parameter) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    invalid(parameter, "'" + std::string(text) + "' is not a finite number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return parts;
}

double unit(double v0) { return v0 > 0.0 ? v0 : 1.0; }

std::string mode_label(OutputMode mode, const std::string& quantity, const std::string& units) {
  if (mode == OutputMode::phase) {
    return "arg " + quantity + " [rad]";
  }
  return std::string(to_string(mode)) + " " + quantity + " [" + units + "]";
}

// Reduces value/scale; the phase ignores the (positive) scale.
double reduced(Complex value, double scale, OutputMode mode) {
  return mode == OutputMode::phase ? reduce(value, mode) : reduce(value / scale, mode);
}

void append(std::string& row, double value) {
  row += ',';
  row += format_number(value);
}

// Computes rows in parallel and writes them in index order.
template <class Row>
void emit_rows(std::ostream& out, std::size_t count, unsigned threads, Row&& row) {
  std::vector<std::string> rows(count);
  parallel_for(count, threads, [&](std::size_t i) { rows[i] = row(i); });
  for (const std::string& r : rows) {
    out << r << '\n';
  }
}

void check_stream(std::ostream& out) {
  if (!out) {
    throw std::ios_base::failure("write failed");
  }
}

}  // namespace

OutputMode parse_mode(std::string_view text) {
  if (text == "re") {
    return OutputMode::re;
  }
  if (text == "im") {
    return OutputMode::im;
  }
  if (text == "abs") {
    return OutputMode::abs;
  }
  if (text == "phase") {
    return OutputMode::phase;
  }
  invalid("mode", "expected re, im, abs or phase, got '" + std::string(text) + "'");
}

std::string_view to_string(OutputMode mode) {
  switch (mode) {
    case OutputMode::re:
      return "re";
    case OutputMode::im:
      return "im";
    case OutputMode::abs:
      return "abs";
    case OutputMode::phase:
      return "phase";
  }
  return "abs";
}

double reduce(Complex value, OutputMode mode) {
  switch (mode) {
    case OutputMode::re:
      return value.real();
    case OutputMode::im:
      return value.imag();
    case OutputMode::abs:
      return std::abs(value);
    case OutputMode::phase:
      return std::arg(value);
  }
  return std::abs(value);
}

void validate_config(const RunConfig& c) {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(c.fluid.nu0)) {
    invalid("nu0", "must be positive");
  }
  if (!positive(c.fluid.rho0)) {
    invalid("rho0", "must be positive");
  }
  if (c.radii.empty()) {
    invalid("a", "no radius given");
  }
  for (double a : c.radii) {
    if (!positive(a)) {
      invalid("a", "must be positive, got " + format_number(a));
    }
  }
  if (!(std::isfinite(c.v0) && c.v0 >= 0.0)) {
    invalid("v0", "must be non-negative");
  }
  if (c.frequencies.empty()) {
    invalid("f", "no frequency given");
  }
  for (std::size_t i = 0; i < c.frequencies.size(); ++i) {
    if (!positive(c.frequencies[i])) {
      invalid("f", "must be positive, got " + format_number(c.frequencies[i]));
    }
    if (i > 0 && !(c.frequencies[i] > c.frequencies[i - 1])) {
      invalid("f", "frequencies must be strictly increasing");
    }
  }
  if (!std::isfinite(c.t)) {
    invalid("t", "must be finite");
  }
  if (c.profile_points < 2) {
    invalid("grid", "profile needs at least 2 points");
  }
  if (!(positive(c.r_max_factor) && c.r_max_factor > 1.0)) {
    invalid("r-max", "must exceed the cylinder radius");
  }
  if (c.nx < 2 || c.ny < 2) {
    invalid("grid", "field grid needs at least 2 x 2 points");
  }
  if (!positive(c.box_factor)) {
    invalid("box", "must be positive");
  }
  if (!c.box.empty()) {
    if (c.box.size() != 4) {
      invalid("box", "expected x_min:x_max:y_min:y_max");
    }
    for (double v : c.box) {
      if (!std::isfinite(v)) {
        invalid("box", "bounds must be finite");
      }
    }
    if (!(c.box[1] > c.box[0]) || !(c.box[3] > c.box[2])) {
      invalid("box", "expected x_min < x_max and y_min < y_max");
    }
  }
  if (c.nodes < 8) {
    invalid("nodes", "quadrature needs at least 8 nodes");
  }
  const Perturbation& p = c.perturbation;
  if (!(positive(p.B) && positive(p.C) && positive(p.f_a) && positive(p.beta))) {
    invalid("mutate", "factors must be positive");
  }
}

std::vector<double> parse_list(std::string_view text, std::string_view parameter) {
  std::vector<double> values;
  for (std::string_view item : split(text, ',')) {
    const double v = parse_number(item, parameter);
    if (!(v > 0.0)) {
      invalid(parameter, "values must be positive");
    }
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (!(lo > 0.0 && std::isfinite(lo) && hi > lo && std::isfinite(hi))) {
    invalid("f-range", "expected 0 < lo < hi");
  }
  if (n < 2) {
    invalid("f-range", "needs at least 2 points");
  }
  std::vector<double> values(n);
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    values[i] = lo * std::exp(step * i);
  }
  values.front() = lo;
  values.back() = hi;
  return values;
}

std::vector<double> parse_frequency_range(std::string_view text) {
  const std::vector<std::string_view> parts = split(text, ':');
  if (parts.size() != 3) {
    invalid("f-range", "expected lo:hi:n");
  }
  const double lo = parse_number(parts[0], "f-range");
  const double hi = parse_number(parts[1], "f-range");
  const double n = parse_number(parts[2], "f-range");
  if (n != std::floor(n) || n < 2 || n > 1e7) {
    invalid("f-range", "n must be an integer >= 2");
  }
  return log_spaced(lo, hi, static_cast<int>(n));
}

Perturbation parse_mutation(std::string_view text) {
  Perturbation p;
  for (std::string_view item : split(text, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      invalid("mutate", "expected key:factor");
    }
    const std::string_view key = item.substr(0, colon);
    const double factor = parse_number(item.substr(colon + 1), "mutate");
    if (!(factor > 0.0)) {
      invalid("mutate", "factor must be positive");
    }
    if (key == "B") {
      p.B = factor;
    } else if (key == "C") {
      p.C = factor;
    } else if (key == "f_a") {
      p.f_a = factor;
    } else if (key == "beta") {
      p.beta = factor;
    } else {
      invalid("mutate", "unknown coefficient '" + std::string(key) + "' (B, C, f_a, beta)");
    }
  }
  return p;
}

FieldBox field_box(const RunConfig& c, double a) {
  if (c.box.size() == 4) {
    return {c.box[0], c.box[1], c.box[2], c.box[3], c.nx, c.ny};
  }
  const double half = c.box_factor * a;
  return {-half, half, -half, half, c.nx, c.ny};
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

void write_profile_csv(std::ostream& out, const RunConfig& c) {
  validate_config(c);
  out << "a [m],f [Hz],r [m],r/a [1]," << mode_label(c.mode, "v_r(r;0)/v0", "1") << ','
      << mode_label(c.mode, "v_theta(r;pi/2)/v0", "1") << '\n';
  for (double a : c.radii) {
    for (double f : c.frequencies) {
      const Scenario s = Scenario::at_frequency(c.fluid, a, c.v0, f);
      const int n = c.profile_points;
      emit_rows(out, n, c.threads, [&](std::size_t i) {
        const double x = i + 1 == static_cast<std::size_t>(n)
                             ? c.r_max_factor
                             : std::pow(c.r_max_factor, static_cast<double>(i) / (n - 1));
        const double r = a * x;
        const Complex vr = velocity(s, {r, 0.0}, c.t).vr;
        const Complex vt = velocity(s, {r, std::numbers::pi / 2}, c.t).vtheta;
        std::string row = format_number(a);
        append(row, f);
        append(row, r);
        append(row, x);
        append(row, reduced(vr, unit(c.v0), c.mode));
        append(row, reduced(vt, unit(c.v0), c.mode));
        return row;
      });
    }
  }
  check_stream(out);
}

void write_field_csv(std::ostream& out, const RunConfig& c) {
  validate_config(c);
  out << "a [m],f [Hz],x [m],y [m],masked [0/1],Re p [Pa],abs p [Pa],Re v_x [m/s],Re v_y [m/s]\n";
  for (double a : c.radii) {
    const FieldBox box = field_box(c, a);
    for (double f : c.frequencies) {
      const Scenario s = Scenario::at_frequency(c.fluid, a, c.v0, f);
      // Mirror-symmetric boxes give exactly mirrored coordinates.
      auto coord = [](double lo, double hi, int n, int i) {
        return (lo * (n - 1 - i) + hi * i) / (n - 1);
      };
      emit_rows(out, static_cast<std::size_t>(box.nx) * box.ny, c.threads, [&](std::size_t k) {
        const int j = static_cast<int>(k) / box.nx;
        const int i = static_cast<int>(k) % box.nx;
        const double x = coord(box.x_min, box.x_max, box.nx, i);
        const double y = coord(box.y_min, box.y_max, box.ny, j);
        std::string row = format_number(a);
        append(row, f);
        append(row, x);
        append(row, y);
        const double r = std::hypot(x, y);
        if (r < a) {
          row += ",1,,,,";
          return row;
        }
        row += ",0";
        const FlowState st = flow_state_at(s, x, y, c.t);
        const CartesianVector v = to_cartesian({st.vr, st.vtheta}, x / r, y / r);
        append(row, st.p.real());
        append(row, std::abs(st.p));
        append(row, v.x.real());
        append(row, v.y.real());
        return row;
      });
    }
  }
  check_stream(out);
}

void write_force_csv(std::ostream& out, const RunConfig& c) {
  validate_config(c);
  const std::string units = "N s/m^2";
  out << "a [m],f [Hz]," << mode_label(c.mode, "F_analytic/v0", units) << ','
      << mode_label(c.mode, "F_buoyancy/v0", units) << ','
      << mode_label(c.mode, "F_viscous_approx/v0", units) << ','
      << mode_label(c.mode, "F_quadrature/v0", units) << '\n';
  for (double a : c.radii) {
    // Parallel over frequencies; each quadrature runs on one thread so the
    // result is the same for any thread count.
    emit_rows(out, c.frequencies.size(), c.threads, [&](std::size_t i) {
      const double f = c.frequencies[i];
      const Scenario s = Scenario::at_frequency(c.fluid, a, c.v0, f);
      const double scale = unit(c.v0);
      std::string row = format_number(a);
      append(row, f);
      append(row, reduced(force_analytic(s, c.t).fx, scale, c.mode));
      append(row, reduced(force_buoyancy(s, c.t).fx, scale, c.mode));
      append(row, reduced(force_viscous_approx(s, c.t).fx, scale, c.mode));
      append(row, reduced(force_quadrature(s, c.t, c.nodes, 1).fx, scale, c.mode));
      return row;
    });
  }
  check_stream(out);
}

int run_validate(std::ostream& out, const RunConfig& c) {
  validate_config(c);
  bool all = true;
  int checks = 0;
  int failed = 0;
  out << "a [m],f [Hz],suite,check,status,value,limit,detail\n";
  for (double a : c.radii) {
    for (double f : c.frequencies) {
      const Scenario s = Scenario::at_frequency(c.fluid, a, c.v0, f, c.perturbation);
      for (const SuiteReport& rep : full_suite(s, c.threads)) {
        for (const CheckResult& chk : rep.checks) {
          ++checks;
          if (!chk.passed) {
            ++failed;
            all = false;
          }
          std::string detail = chk.detail;
          std::replace(detail.begin(), detail.end(), ',', ';');
          std::replace(detail.begin(), detail.end(), '\n', ' ');
          out << format_number(a) << ',' << format_number(f) << ',' << rep.name << ','
              << chk.name << ',' << (chk.passed ? "pass" : "FAIL") << ','
              << format_number(chk.value) << ',' << format_number(chk.limit) << ',' << detail
              << '\n';
        }
      }
    }
  }
  out << "# " << (all ? "PASS" : "FAIL") << ": " << (checks - failed) << " of " << checks
      << " checks passed\n";
  check_stream(out);
  return all ? 0 : 1;
}

}  // namespace oscylinder
