#!/usr/bin/env python3
"""Extended-precision reference values for the oscillating-cylinder tests.

Evaluates the closed-form fields and Bessel functions with mpmath at 40
digits. The printed numbers are frozen into tests/*.cpp; rerun this script
if a reference value needs to be regenerated.
"""
import mpmath as mp

mp.mp.dps = 40

NU0 = mp.mpf("15.11e-6")
RHO0 = mp.mpf("1.204")
JP = (1 + 1j) / mp.sqrt(2)
JM = (1 - 1j) / mp.sqrt(2)


def series_k0(x):
    # K0 from the Maclaurin/log series, independent of mpmath.besselk
    x = mp.mpf(x)
    q = x * x / 4
    i0 = mp.nsum(lambda k: q**k / mp.factorial(k) ** 2, [0, mp.inf])
    s = mp.nsum(lambda k: q**k / mp.factorial(k) ** 2 * mp.harmonic(k), [1, mp.inf])
    return -(mp.log(x / 2) + mp.euler) * i0 + s


def series_k1(x):
    x = mp.mpf(x)
    q = x * x / 4
    i1 = mp.nsum(lambda k: (x / 2) * q**k / (mp.factorial(k) * mp.factorial(k + 1)), [0, mp.inf])
    s = mp.nsum(lambda k: (mp.digamma(k + 1) + mp.digamma(k + 2)) * q**k
                / (mp.factorial(k) * mp.factorial(k + 1)), [0, mp.inf])
    return 1 / x + mp.log(x / 2) * i1 - x / 4 * s


def scenario(a, freq, v0=1):
    a = mp.mpf(a)
    omega = 2 * mp.pi * mp.mpf(freq)
    beta = mp.sqrt(omega / NU0)
    k = JM * beta
    k0a = mp.besselk(0, k * a)
    k1a = mp.besselk(1, k * a)
    fa = 2 * JP * k1a / k0a
    C = 1j * RHO0 * a**2 * omega * v0 * (1 + 2 * JP / (beta * a) * k1a / k0a)
    B = -(RHO0 * a**2 * omega * v0 + 1j * C) / (a * k1a)
    return dict(a=a, omega=omega, beta=beta, k=k, k0a=k0a, k1a=k1a, fa=fa, C=C, B=B, v0=mp.mpf(v0))


def f_of_r(s, r):
    return 2 * JP * mp.besselk(1, s["k"] * r) / s["k0a"]


def vr(s, r, th, t=0):
    a, b = s["a"], s["beta"]
    br = 1 - a**2 / r**2 + f_of_r(s, r) / (b * r) - a * s["fa"] / (b * r**2)
    return s["v0"] * mp.cos(th) * mp.exp(-1j * s["omega"] * t) * br


def vt(s, r, th, t=0):
    a, b = s["a"], s["beta"]
    br = (-1 - a**2 / r**2 + 2 * mp.besselk(0, s["k"] * r) / s["k0a"]
          + f_of_r(s, r) / (b * r) - a * s["fa"] / (b * r**2))
    return s["v0"] * mp.sin(th) * mp.exp(-1j * s["omega"] * t) * br


def p(s, r, th, t=0):
    a, b = s["a"], s["beta"]
    return 1j * s["v0"] * RHO0 * s["omega"] * mp.cos(th) * mp.exp(-1j * s["omega"] * t) * (
        r + a**2 / r + a * s["fa"] / (b * r))


def traction_x(s, th, t=0):
    a = s["a"]
    mu = RHO0 * NU0
    dvr = mp.diff(lambda r: vr(s, r, th, t), a)
    dvt = mp.diff(lambda r: vt(s, r, th, t), a)
    dvr_dth = mp.diff(lambda q: vr(s, a, q, t), th)
    prr = -p(s, a, th, t) + 2 * mu * dvr
    prt = mu * (dvr_dth / a + dvt - vt(s, a, th, t) / a)
    return prr * mp.cos(th) - prt * mp.sin(th)


def force(s, t=0):
    a, b = s["a"], s["beta"]
    return -2j * mp.pi * RHO0 * s["v0"] * s["omega"] * a * (a + s["fa"] / b) * mp.exp(-1j * s["omega"] * t)


def show(name, z):
    z = mp.mpc(z)
    print(f"{name}: {mp.nstr(z.real, 20)} {mp.nstr(z.imag, 20)}")


def recovery_radius(s, frac):
    # dense log grid scan then bisection on |vr(r,0)| = frac
    a = s["a"]
    n = 20000
    grid = [a * mp.power(10, mp.mpf(6) * i / n) for i in range(n + 1)]
    vals = [abs(vr(s, r, 0)) for r in grid]
    last_below = max(i for i, v in enumerate(vals) if v < frac)
    lo, hi = grid[last_below], grid[last_below + 1]
    g = lambda r: abs(vr(s, r, 0)) - frac
    return mp.findroot(g, (lo, hi), solver="bisect" if False else "anderson")


def bessel_table():
    """Scaled reference values exp(z)K(z), exp(-|Re z|)I(z) as C++ initializers."""
    pts = [(1e-4, 0), (1e-4, -1e-4), (0.5, 0), (1, 0), (1.5, -1.5), (2, 0), (0, 2), (2.01, 0.3),
           (3, 4), (0.1, -2), (5, 0), (7.9, 0), (8.1, 0), (0, 8), (5.6, -5.6), (10, 10), (0, 15),
           (17, 3), (24.9, 0), (25.1, 0), (0.2, 29.8), (25, -1), (40, -40), (100, 0), (0, 100),
           (700, 0), (500, -500), (-2, 1), (-5, -3)]
    for re, im in pts:
        z = mp.mpc(re, im)
        k0 = mp.besselk(0, z) * mp.exp(z)
        k1 = mp.besselk(1, z) * mp.exp(z)
        i0 = mp.besseli(0, z) * mp.exp(-abs(z.real))
        i1 = mp.besseli(1, z) * mp.exp(-abs(z.real))
        f = lambda w: f"{{{mp.nstr(w.real, 20)}, {mp.nstr(w.imag, 20)}}}"
        print(f"    {{{{{re}, {im}}}, {f(k0)}, {f(k1)}, {f(i0)}, {f(i1)}}},")


if __name__ == "__main__":
    import sys
    if "--bessel-table" in sys.argv:
        bessel_table()
        sys.exit(0)
    print("K0(1) series", mp.nstr(series_k0(1), 20), "mpmath", mp.nstr(mp.besselk(0, 1), 20))
    print("K1(1) series", mp.nstr(series_k1(1), 20), "mpmath", mp.nstr(mp.besselk(1, 1), 20))
    print("I0(0.5)", mp.nstr(mp.besseli(0, 0.5), 20))
    s10 = scenario("1e-6", 10)
    print("beta(10Hz)", s10["beta"], "beta*a", s10["beta"] * s10["a"])
    z = s10["k"] * s10["a"]
    show("z=j-*beta*a", z)
    show("K0(z)", mp.besselk(0, z))
    show("K1(z)", mp.besselk(1, z))
    for zz in [mp.mpc(3, 4), mp.mpc(0.1, -2), mp.mpc(10, 10), mp.mpc(0, 15), mp.mpc(25, -1), mp.mpc(-2, 1)]:
        show(f"K0({zz})", mp.besselk(0, zz)); show(f"K1({zz})", mp.besselk(1, zz))
        show(f"I0({zz})", mp.besseli(0, zz)); show(f"I1({zz})", mp.besseli(1, zz))
    show("C(1um,10Hz)", s10["C"])
    show("B(1um,10Hz)", s10["B"])
    show("f(a)(1um,10Hz)", s10["fa"])
    show("vr(5a,0)(1um,10Hz)", vr(s10, 5 * s10["a"], 0))
    show("vt(5a,pi/2)(1um,10Hz)", vt(s10, 5 * s10["a"], mp.pi / 2))
    show("p(2a,0)(1um,10Hz)", p(s10, 2 * s10["a"], 0))
    s100 = scenario("1e-6", 100)
    show("F(1um,100Hz)", force(s100))
    print("Fp(1um,100Hz)", 2 * mp.pi * RHO0 * s100["omega"] * s100["a"] ** 2)
    show("traction_x(1um,100Hz,pi/4)", traction_x(s100, mp.pi / 4))
    # quadrature of traction vs analytic force (coarse, validates the closed form)
    for a, fr in [("1e-6", 100), ("1e-4", 1000)]:
        s = scenario(a, fr)
        n = 32
        q = sum(traction_x(s, 2 * mp.pi * j / n) for j in range(n)) * 2 * mp.pi / n * s["a"]
        F = force(s)
        print("quad/analytic", a, fr, mp.nstr(abs(q - F) / abs(F), 5))
    print("recovery 0.9 100Hz", mp.nstr(recovery_radius(s100, 0.9), 20))
    # largest azimuthal velocity ratio at 10 Hz
    m = max(abs(vt(s10, s10["a"] * mp.power(10, mp.mpf(i) / 50), mp.pi / 2)) for i in range(1, 300))
    print("max |vt|/v0 (1um,10Hz)", m)
    for fr in [100, 1000]:
        s = scenario("1e-6", fr)
        print("Fp/F", fr, mp.nstr(2 * mp.pi * RHO0 * s["omega"] * s["a"] ** 2 / abs(force(s)), 6))
    s1k = scenario("1e-6", 1000)
    print("vr(1e4 a) 1000Hz", mp.nstr(abs(vr(s1k, 1e4 * s1k["a"], 0)), 20))
