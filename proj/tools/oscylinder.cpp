// Command-line front end: profile, field and force tables as CSV, and the
// verification runner.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "oscylinder/bessel.hpp"
#include "oscylinder/errors.hpp"
#include "oscylinder/export.hpp"

namespace {

using namespace oscylinder;

constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;
constexpr int exit_io = 3;

struct Options {
  std::string fluid = "air20";
  std::optional<double> nu0;
  std::optional<double> rho0;
  std::string a = "1e-6";
  double v0 = 1.0;
  std::optional<std::string> f;
  std::optional<std::string> f_list;
  std::optional<std::string> f_range;
  double t = 0.0;
  std::string mode = "abs";
  std::optional<std::string> grid;
  std::optional<double> r_max;
  std::optional<std::string> box;
  int nodes = 512;
  unsigned threads = 0;
  std::string out;
  std::string mutate;
  double z_re = 1.0;
  double z_im = 0.0;
  bool scaled = false;
};

std::vector<double> split_numbers(const std::string& text, char sep, const char* parameter) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    const std::string item = text.substr(start, pos - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw DomainError(std::string("invalid ") + parameter + ": '" + item + "' is not a number");
    }
    if (pos == std::string::npos) {
      break;
    }
    start = pos + 1;
  }
  return values;
}

RunConfig make_config(const Options& o, const std::string& command) {
  RunConfig c;
  if (o.fluid != "air20") {
    throw DomainError("invalid fluid: unknown preset '" + o.fluid + "' (available: air20)");
  }
  if (o.nu0) {
    c.fluid.nu0 = *o.nu0;
  }
  if (o.rho0) {
    c.fluid.rho0 = *o.rho0;
  }
  c.radii = split_numbers(o.a, ',', "a");
  for (double a : c.radii) {
    if (!(a > 0.0)) {
      throw DomainError("invalid a: cylinder radius must be positive");
    }
  }
  c.v0 = o.v0;
  if (o.f) {
    c.frequencies = parse_list(*o.f, "f");
    if (c.frequencies.size() != 1) {
      throw DomainError("invalid f: expected a single frequency (use --f-list for several)");
    }
  } else if (o.f_list) {
    c.frequencies = parse_list(*o.f_list, "f-list");
  } else if (o.f_range) {
    c.frequencies = parse_frequency_range(*o.f_range);
  } else if (command == "force") {
    c.frequencies = log_spaced(1.0, 1e4, 200);
  }
  c.t = o.t;
  c.mode = parse_mode(o.mode);
  if (o.grid) {
    const std::vector<double> g = split_numbers(*o.grid, ':', "grid");
    for (double v : g) {
      if (!(v >= 0.0 && v <= 1e8) || v != std::floor(v)) {
        throw DomainError("invalid grid: counts must be integers");
      }
    }
    if (command == "field") {
      if (g.size() != 2) {
        throw DomainError("invalid grid: field expects NX:NY");
      }
      c.nx = static_cast<int>(g[0]);
      c.ny = static_cast<int>(g[1]);
    } else {
      if (g.size() != 1) {
        throw DomainError("invalid grid: profile expects a single point count");
      }
      c.profile_points = static_cast<int>(g[0]);
    }
  }
  if (o.r_max) {
    if (c.radii.size() != 1) {
      throw DomainError("invalid r-max: only allowed with a single radius");
    }
    c.r_max_factor = *o.r_max / c.radii.front();
  }
  if (o.box) {
    c.box = split_numbers(*o.box, ':', "box");
  }
  c.nodes = o.nodes;
  c.threads = o.threads;
  if (!o.mutate.empty()) {
    c.perturbation = parse_mutation(o.mutate);
  }
  validate_config(c);
  return c;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--fluid", o.fluid, "Fluid preset (air20: dry air, 20 C)");
  cmd->add_option("--nu0", o.nu0, "Kinematic viscosity [m^2/s], overrides the preset");
  cmd->add_option("--rho0", o.rho0, "Density [kg/m^3], overrides the preset");
  cmd->add_option("--a", o.a, "Cylinder radius [m], or a comma-separated list");
  cmd->add_option("--v0", o.v0, "Far-field velocity amplitude [m/s]");
  auto* f = cmd->add_option("--f", o.f, "Frequency [Hz]");
  auto* fl = cmd->add_option("--f-list", o.f_list, "Comma-separated frequencies [Hz]");
  auto* fr = cmd->add_option("--f-range", o.f_range, "Log-spaced frequencies lo:hi:n [Hz]");
  f->excludes(fl)->excludes(fr);
  fl->excludes(fr);
  cmd->add_option("--t", o.t, "Time [s]");
  cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  cmd->add_option("--out", o.out, "Output file (default: standard output)");
}

int run(const std::string& command, const Options& o) {
  const RunConfig config = make_config(o, command);
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "error: cannot open %s for writing\n", o.out.c_str());
      return exit_io;
    }
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  int status = 0;
  try {
    if (command == "profile") {
      write_profile_csv(out, config);
    } else if (command == "field") {
      write_field_csv(out, config);
    } else if (command == "force") {
      write_force_csv(out, config);
    } else {
      status = run_validate(out, config) == 0 ? 0 : exit_failed;
    }
    out.flush();
  } catch (const std::ios_base::failure&) {
    std::fprintf(stderr, "error: writing %s failed\n",
                 o.out.empty() ? "standard output" : o.out.c_str());
    return exit_io;
  }
  if (!out) {
    std::fprintf(stderr, "error: writing %s failed\n",
                 o.out.empty() ? "standard output" : o.out.c_str());
    return exit_io;
  }
  return status;
}

int bessel_eval(const Options& o) {
  const Complex z{o.z_re, o.z_im};
  const bessel::Scaling sc = o.scaled ? bessel::Scaling::exponential : bessel::Scaling::none;
  const bessel::KPair k = bessel::k01(z, sc);
  const Complex i0 = bessel::i0(z, sc);
  const Complex i1 = bessel::i1(z, sc);
  std::printf("function,re,im\n");
  std::printf("K0,%s,%s\n", format_number(k.k0.real()).c_str(), format_number(k.k0.imag()).c_str());
  std::printf("K1,%s,%s\n", format_number(k.k1.real()).c_str(), format_number(k.k1.imag()).c_str());
  std::printf("I0,%s,%s\n", format_number(i0.real()).c_str(), format_number(i0.imag()).c_str());
  std::printf("I1,%s,%s\n", format_number(i1.real()).c_str(), format_number(i1.imag()).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oscillating flow past a circular cylinder: fields, forces and checks (SI units)"};
  app.require_subcommand(1);
  Options o;

  auto* profile = app.add_subcommand("profile", "Radial velocity profiles |v_r(r,0)|, |v_theta(r,pi/2)|");
  add_common(profile, o);
  profile->add_option("--mode", o.mode, "re, im, abs or phase");
  profile->add_option("--grid", o.grid, "Number of log-spaced radii (default 200)");
  profile->add_option("--r-max", o.r_max, "Largest radius [m] (default 1e4 a)");

  auto* field = app.add_subcommand("field", "Pressure and velocity on a Cartesian grid");
  add_common(field, o);
  field->add_option("--grid", o.grid, "Grid points NX:NY (default 101:101)");
  field->add_option("--box", o.box, "x_min:x_max:y_min:y_max [m] (default +-5a)");

  auto* force = app.add_subcommand("force", "Force per unit length over a frequency sweep");
  add_common(force, o);
  force->add_option("--mode", o.mode, "re, im, abs or phase");
  force->add_option("--nodes", o.nodes, "Quadrature nodes (default 512)");

  auto* validate = app.add_subcommand("validate", "Run the verification suites; exit 0 iff all pass");
  add_common(validate, o);
  validate->add_option("--mutate", o.mutate, "Scale coefficients, e.g. C:1.001 (debugging)");

  auto* bessel_cmd = app.add_subcommand("bessel-eval", "Evaluate K0, K1, I0, I1 at complex z");
  bessel_cmd->group("");
  bessel_cmd->add_option("--re", o.z_re, "Re z");
  bessel_cmd->add_option("--im", o.z_im, "Im z");
  bessel_cmd->add_flag("--scaled", o.scaled, "exp(z) K_n and exp(-|Re z|) I_n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }

  try {
    if (bessel_cmd->parsed()) {
      return bessel_eval(o);
    }
    for (auto* cmd : {profile, field, force, validate}) {
      if (cmd->parsed()) {
        return run(cmd->get_name(), o);
      }
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_invalid;
  } catch (const RangeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_invalid;
  }
  return exit_invalid;
}
