#pragma once

// Modified Bessel functions of order 0 and 1 for complex argument.
//
// The flow solution only needs K0 and K1 on the ray arg z = -pi/4, but the
// kernels are accurate on the whole right half-plane |arg z| <= pi/2 and are
// continued analytically to the rest of the principal branch. I0 and I1 exist
// to close the Wronskian self-test.
//
// Regimes for K: log/Maclaurin series for |z| <= 2, Steed's continued
// fraction (Temme's CF2) for 2 < |z| < 25, Hankel asymptotic expansion beyond.
// I uses the power series for |z| <= 2 and Miller's backward recurrence
// normalised by exp(z) = I0 + 2 sum I_n otherwise.

#include <complex>

namespace oscylinder {

using Complex = std::complex<double>;

namespace bessel {

/// Exponential scaling of the returned value.
///
/// `exponential` returns exp(z) K(z) for the K functions and exp(-|Re z|) I(z)
/// for the I functions, which stay finite for arbitrarily large |z|.
enum class Scaling { none, exponential };

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243104;

struct KPair {
  Complex k0;
  Complex k1;
};

/// K0 and K1 from a single evaluation. Throws DomainError for z = 0 or z on the
/// negative real axis; RangeError if an unscaled value under- or overflows.
KPair k01(Complex z, Scaling scaling = Scaling::none);

Complex k0(Complex z, Scaling scaling = Scaling::none);
Complex k1(Complex z, Scaling scaling = Scaling::none);
Complex i0(Complex z, Scaling scaling = Scaling::none);
Complex i1(Complex z, Scaling scaling = Scaling::none);

/// K1(z) - 1/z, evaluated without cancellation for small |z|.
Complex k1_regular(Complex z);

}  // namespace bessel
}  // namespace oscylinder
