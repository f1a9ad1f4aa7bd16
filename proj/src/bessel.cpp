#include "oscylinder/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oscylinder/errors.hpp"

namespace oscylinder::bessel {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double series_radius = 2.0;
constexpr double asymptotic_radius = 25.0;
constexpr int max_iterations = 20000;

const Complex imag_unit{0.0, 1.0};

void check_domain(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("bessel: argument is not finite");
  }
  if (z == Complex{}) {
    throw DomainError("bessel: argument z = 0");
  }
  if (z.imag() == 0.0 && z.real() < 0.0) {
    throw DomainError("bessel: argument on the negative real axis (branch cut)");
  }
}

struct SeriesValues {
  Complex i0;
  Complex i1;
  Complex k0;
  Complex k1_regular;  // K1 - 1/z
};

// Ascending series, valid on the whole principal branch; used for |z| <= 2
// where the logarithmic cancellation costs at most a digit.
SeriesValues small_argument_series(Complex z) {
  const Complex q = 0.25 * z * z;
  Complex term0{1.0};  // q^k / (k!)^2
  Complex term1{1.0};  // q^k / (k! (k+1)!)
  Complex sum_i0{1.0};
  Complex sum_i1{1.0};
  Complex sum_k0{0.0};
  Complex sum_k1{1.0 - 2.0 * euler_gamma};  // psi(1) + psi(2)
  double harmonic = 0.0;
  for (int k = 1; k < 100; ++k) {
    const double dk = k;
    term0 *= q / (dk * dk);
    term1 *= q / (dk * (dk + 1.0));
    harmonic += 1.0 / dk;
    sum_i0 += term0;
    sum_i1 += term1;
    sum_k0 += term0 * harmonic;
    sum_k1 += term1 * (2.0 * (harmonic - euler_gamma) + 1.0 / (dk + 1.0));
    if (std::abs(term0) * (1.0 + harmonic) <= 0.25 * eps * std::abs(sum_i0) &&
        std::abs(term1) * (2.0 + 2.0 * harmonic) <= 0.25 * eps * std::abs(sum_i1)) {
      break;
    }
  }
  const Complex log_half_z = std::log(0.5 * z);
  SeriesValues out;
  out.i0 = sum_i0;
  out.i1 = 0.5 * z * sum_i1;
  out.k0 = -(log_half_z + euler_gamma) * out.i0 + sum_k0;
  out.k1_regular = log_half_z * out.i1 - 0.25 * z * sum_k1;
  return out;
}

// Steed's algorithm for Temme's continued fraction CF2 (order 0), returning
// exp(z) K0(z) and exp(z) K1(z). Requires Re z >= 0 and |z| > 2.
KPair steed_cf2_scaled(Complex z) {
  Complex b = 2.0 * (1.0 + z);
  Complex d = 1.0 / b;
  Complex h = d;
  Complex delh = d;
  Complex q1{0.0};
  Complex q2{1.0};
  const double a1 = 0.25;
  Complex q{a1};
  double c = a1;
  double a = -a1;
  Complex s = 1.0 + q * delh;
  int i = 2;
  for (; i <= max_iterations; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const Complex qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const Complex dels = q * delh;
    s += dels;
    if (std::abs(dels) < 0.5 * eps * std::abs(s)) {
      break;
    }
  }
  if (i > max_iterations) {
    throw RangeError("bessel: continued fraction failed to converge");
  }
  h *= a1;
  const Complex k0s = std::sqrt(std::numbers::pi / (2.0 * z)) / s;
  const Complex k1s = k0s * (z + 0.5 - h) / z;
  return {k0s, k1s};
}

// Hankel expansion exp(z) K_nu(z) ~ sqrt(pi/2z) sum a_k(nu) / z^k, |z| >= 25.
KPair asymptotic_scaled(Complex z) {
  const Complex inv8z = 1.0 / (8.0 * z);
  Complex t0{1.0};
  Complex t1{1.0};
  Complex s0{1.0};
  Complex s1{1.0};
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double m = odd * odd;
    t0 *= (-m / k) * inv8z;
    t1 *= ((4.0 - m) / k) * inv8z;
    s0 += t0;
    s1 += t1;
    if (std::abs(t0) < 0.25 * eps * std::abs(s0) && std::abs(t1) < 0.25 * eps * std::abs(s1)) {
      break;
    }
  }
  const Complex prefactor = std::sqrt(std::numbers::pi / (2.0 * z));
  return {prefactor * s0, prefactor * s1};
}

// exp(z) K_n(z) for Re z >= 0, |z| > 2.
KPair k_scaled_right_half(Complex z) {
  if (std::abs(z) < asymptotic_radius) {
    return steed_cf2_scaled(z);
  }
  return asymptotic_scaled(z);
}

struct IPair {
  Complex i0;
  Complex i1;
};

// Miller's backward recurrence I_{n-1} = I_{n+1} + (2n/z) I_n, normalised with
// exp(z) = I0 + 2 sum_{n>=1} I_n. Returns exp(-Re z) I_n(z) for Re z >= 0.
IPair miller_scaled(Complex z) {
  const double az = std::abs(z);
  const int start = 2 * static_cast<int>((az + 10.0 * std::cbrt(az) + 30.0) / 2.0);
  const Complex two_over_z = 2.0 / z;
  constexpr double big = 1e250;
  constexpr double shrink = 1e-250;
  Complex upper{0.0};   // I_{n+1}
  Complex current{1.0};  // I_n
  Complex sum{0.0};      // 2 * sum of I_m for m >= n
  for (int n = start; n >= 1; --n) {
    const Complex lower = upper + (static_cast<double>(n) * two_over_z) * current;
    sum += 2.0 * current;
    upper = current;
    current = lower;
    if (std::abs(current) > big) {
      current *= shrink;
      upper *= shrink;
      sum *= shrink;
    }
  }
  const Complex trial_i1 = upper;
  const Complex total = current + sum;
  const Complex phase = std::polar(1.0, z.imag());
  return {current / total * phase, trial_i1 / total * phase};
}

IPair i_scaled(Complex z) {
  if (std::abs(z) <= series_radius) {
    const SeriesValues sv = small_argument_series(z);
    const Complex scale = std::exp(-std::abs(z.real()));
    return {sv.i0 * scale, sv.i1 * scale};
  }
  if (z.real() < 0.0) {
    // I_n(-w) = (-1)^n I_n(w); |Re z| is unchanged by the reflection.
    const IPair w = miller_scaled(-z);
    return {w.i0, -w.i1};
  }
  return miller_scaled(z);
}

Complex unscale_k(Complex scaled, Complex z, const char* name) {
  const Complex value = scaled * std::exp(-z);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
      std::abs(value) < std::numeric_limits<double>::min()) {
    throw RangeError(std::string("bessel: unscaled ") + name +
                     " not representable; request the exponentially scaled value");
  }
  return value;
}

Complex unscale_i(Complex scaled, Complex z, const char* name) {
  const Complex value = scaled * std::exp(std::abs(z.real()));
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw RangeError(std::string("bessel: unscaled ") + name + " overflows");
  }
  return value;
}

}  // namespace

KPair k01(Complex z, Scaling scaling) {
  check_domain(z);
  if (std::abs(z) <= series_radius) {
    const SeriesValues sv = small_argument_series(z);
    const KPair plain{sv.k0, sv.k1_regular + 1.0 / z};
    if (scaling == Scaling::none) {
      return plain;
    }
    const Complex ez = std::exp(z);
    return {plain.k0 * ez, plain.k1 * ez};
  }

  if (z.real() >= 0.0) {
    const KPair scaled = k_scaled_right_half(z);
    if (scaling == Scaling::exponential) {
      return scaled;
    }
    return {unscale_k(scaled.k0, z, "K0"), unscale_k(scaled.k1, z, "K1")};
  }

  // Left half-plane: K_n(w e^{+-i pi}) = (-1)^n K_n(w) -+ i pi I_n(w), w = -z.
  const Complex w = -z;
  const double side = z.imag() > 0.0 ? 1.0 : -1.0;
  const KPair kw = k_scaled_right_half(w);
  const IPair iw = miller_scaled(w);
  if (scaling == Scaling::exponential) {
    const Complex decay = std::exp(-2.0 * w);
    const Complex rotate = std::polar(1.0, -w.imag());
    return {decay * kw.k0 - side * std::numbers::pi * imag_unit * rotate * iw.i0,
            -decay * kw.k1 - side * std::numbers::pi * imag_unit * rotate * iw.i1};
  }
  const Complex decay = std::exp(-w);
  const double grow = std::exp(w.real());
  const KPair value{decay * kw.k0 - side * std::numbers::pi * imag_unit * grow * iw.i0,
                    -decay * kw.k1 - side * std::numbers::pi * imag_unit * grow * iw.i1};
  if (!std::isfinite(std::abs(value.k0)) || !std::isfinite(std::abs(value.k1))) {
    throw RangeError("bessel: unscaled K overflows in the left half-plane");
  }
  return value;
}

Complex k0(Complex z, Scaling scaling) { return k01(z, scaling).k0; }

Complex k1(Complex z, Scaling scaling) { return k01(z, scaling).k1; }

Complex i0(Complex z, Scaling scaling) {
  check_domain(z);
  const IPair scaled = i_scaled(z);
  return scaling == Scaling::exponential ? scaled.i0 : unscale_i(scaled.i0, z, "I0");
}

Complex i1(Complex z, Scaling scaling) {
  check_domain(z);
  const IPair scaled = i_scaled(z);
  return scaling == Scaling::exponential ? scaled.i1 : unscale_i(scaled.i1, z, "I1");
}

Complex k1_regular(Complex z) {
  check_domain(z);
  if (std::abs(z) <= series_radius) {
    return small_argument_series(z).k1_regular;
  }
  return k1(z) - 1.0 / z;
}

}  // namespace oscylinder::bessel
