#!/usr/bin/env python3
"""Extended-precision reference values frozen into the Rust test suites.

Run once with mpmath at 50 digits; the printed Rust constants are pasted into
crates/core/tests/common/reference.rs. Nothing here is imported at build time.
"""
import mpmath as mp

mp.mp.dps = 50

third = mp.mpf(1) / 3


def series_j(nu, x, sign=-1):
    """Direct power-series summation of J (sign=-1) or I (sign=+1)."""
    x = mp.mpf(x)
    total = mp.mpf(0)
    r = 0
    while True:
        term = (sign ** r) * (x / 2) ** (nu + 2 * r) / (mp.factorial(r) * mp.gamma(nu + r + 1))
        total += term
        if r > 10 and abs(term) < mp.mpf(10) ** (-60):
            break
        r += 1
    return total


def k_from_i(nu, x):
    return mp.pi / (2 * mp.sin(nu * mp.pi)) * (series_j(-nu, x, 1) - series_j(nu, x, 1))


def neumann(nu, x):
    return (series_j(nu, x) * mp.cos(nu * mp.pi) - series_j(-nu, x)) / mp.sin(nu * mp.pi)


def airy_ai_pos(z):
    s = mp.mpf(2) / 3 * mp.mpf(z) ** 1.5
    return mp.sqrt(mp.mpf(z)) / 3 * (series_j(-third, s, 1) - series_j(third, s, 1))


def airy_bi_neg(w):
    s = mp.mpf(2) / 3 * mp.mpf(w) ** 1.5
    return mp.sqrt(mp.mpf(w) / 3) * (series_j(-third, s) - series_j(third, s))


def emit(name, value):
    print(f"pub const {name}: f64 = {mp.nstr(value, 20, strip_zeros=False)};")


emit("GAMMA_MINUS_TWO_THIRDS", mp.gamma(mp.mpf(4) / 3 - 2))
emit("J_THIRD_AT_5", series_j(third, 5))
emit("I_MINUS_THIRD_AT_2", series_j(-third, 2, 1))
emit("K_THIRD_AT_1", k_from_i(third, 1))
emit("N_MINUS_THIRD_AT_2", neumann(-third, 2))
emit("AI_AT_1", airy_ai_pos(1))
emit("BI_AT_MINUS_2", airy_bi_neg(2))

print()
print("pub const GAMMA_TABLE: &[(f64, f64)] = &[")
for x in ["0.1", "0.5", "2/3", "4/3", "1/6", "5/6", "2.5", "7.25", "-0.5", "-1/3", "-2/3", "-7/6", "-5/2", "-10/3", "25.5"]:
    v = mp.mpf(mp.fraction(*map(int, x.split("/")))) if "/" in x else mp.mpf(x)
    print(f"    ({mp.nstr(v, 20)}, {mp.nstr(mp.gamma(v), 20)}),")
print("];")

print()
print("// (nu, x, J_nu(x))")
print("pub const BESSEL_J_TABLE: &[(f64, f64, f64)] = &[")
for nu in [third, -third, 2 * third, -2 * third, mp.mpf(0), mp.mpf(-0.5), mp.mpf(0.5), mp.mpf(1)]:
    for x in ["0.3", "2", "7.5", "11.9", "12.1", "18", "40", "250.5"]:
        print(f"    ({mp.nstr(nu, 20)}, {x}, {mp.nstr(mp.besselj(nu, mp.mpf(x)), 20)}),")
print("];")

print()
print("// (nu, x, I_nu(x))")
print("pub const BESSEL_I_TABLE: &[(f64, f64, f64)] = &[")
for nu in [third, -third, 2 * third, -2 * third, mp.mpf(0)]:
    for x in ["0.3", "2", "7.5", "11.9", "12.1", "30"]:
        print(f"    ({mp.nstr(nu, 20)}, {x}, {mp.nstr(mp.besseli(nu, mp.mpf(x)), 20)}),")
print("];")

print()
print("// (nu, x, K_nu(x))")
print("pub const BESSEL_K_TABLE: &[(f64, f64, f64)] = &[")
for nu in [third, 2 * third, mp.mpf(0), mp.mpf(1)]:
    for x in ["0.001", "0.3", "1.9", "2.1", "5", "11.9", "12.1", "30"]:
        print(f"    ({mp.nstr(nu, 20)}, {x}, {mp.nstr(mp.besselk(nu, mp.mpf(x)), 20)}),")
print("];")

print()
print("// (z, Ai, Ai', Bi, Bi')")
print("pub const AIRY_TABLE: &[(f64, f64, f64, f64, f64)] = &[")
for z in ["-7.5", "-2", "-1", "-0.25", "0.25", "1", "2", "3.5", "6"]:
    zz = mp.mpf(z)
    vals = [mp.airyai(zz), mp.airyai(zz, 1), mp.airybi(zz), mp.airybi(zz, 1)]
    print(f"    ({z}, " + ", ".join(mp.nstr(v, 20) for v in vals) + "),")
print("];")

print()
print("// (a, b, c, z, 2F1)")
print("pub const HYP2F1_TABLE: &[(f64, f64, f64, f64, f64)] = &[")
cases = [
    (0.5, 0.5, 1.5, 0.3), (1.0, 1.0, 2.0, -0.7), (4 / 3, 1 / 3, 5 / 6, 0.8), (-0.5, 1 / 3, 4 / 3, 0.95),
    (2.5, 1.0, 0.5, -2.5), (1 / 6, 5 / 6, 7 / 6, 0.999), (0.25, 0.75, 1.5, -10.0), (-3.0, 2.5, 0.75, 0.6),
    (0.5, 0.5, 2.0, 1.0), (0.3, 0.2, 0.7, 0.55),
]
for a, b, c, z in cases:
    print(f"    ({mp.nstr(mp.mpf(a), 20)}, {mp.nstr(mp.mpf(b), 20)}, {mp.nstr(mp.mpf(c), 20)}, {z}, {mp.nstr(mp.hyp2f1(a, b, c, z), 20)}),")
print("];")

print()
print("// fundamental solutions and spectral Green's functions at sample points")
g23, g43 = mp.gamma(2 * third), mp.gamma(4 * third)
fm2 = 9 * g43 / (2 ** (2 * third) * mp.pi * mp.gamma(third)) * mp.mpf(4) ** (-2 * third)
print(f"pub const F_MINUS_N2_AT_0_0_M1: f64 = {mp.nstr(fm2, 20)};")
eq14 = -(2 ** (-2 * third)) / mp.pi * mp.mpf("6.25") ** (-2 * third)
print(f"pub const PLUS_FORMULA_N2_AT_HALF_0_1: f64 = {mp.nstr(eq14, 20)};")
fp1 = -mp.gamma(third / 2) / (3 * 2 ** (2 * third) * mp.sqrt(mp.pi) * g23) * mp.mpf("9.5") ** (-third / 2)
print(f"pub const F_PLUS_N1_AT_1_HALF: f64 = {mp.nstr(fp1, 20)};")
fm3 = 27 * g43 / (2 ** (2 * third) * mp.pi ** 1.5 * mp.gamma(-third / 2)) * abs(mp.mpf("0.09") - 4) ** (-7 * third / 2)
print(f"pub const F_MINUS_N3_AT_01_0_0_M1: f64 = {mp.nstr(fm3, 20)};")
xi = mp.mpf(3)
k = xi ** (2 * third)
airy = -mp.pi / k * mp.airybi(k * mp.mpf("0.7")) * mp.airyai(k * mp.mpf("1.2"))
print(f"pub const AIRY_TWO_SIDED_B07_XI3_Y12: f64 = {mp.nstr(airy, 20)};")
delta = 2 * mp.pi / (2 ** third * 3 ** (4 * third) * g23)
w = 2 * (mp.mpf(2) / 3 * mp.mpf("0.5") ** 1.5)
pkn = delta * 2 ** (-2 * third) * w ** third * mp.bessely(-third, w)
print(f"pub const PLUS_KN_XI2_YM05: f64 = {mp.nstr(pkn, 20)};")
alpha = -1 / (2 ** third * 3 ** third * g23)
w = mp.mpf("1.5") * (mp.mpf(2) / 3 * mp.mpf("0.8") ** 1.5)
oab = alpha * mp.mpf("1.5") ** (-2 * third) * w ** third * mp.besselk(third, w)
print(f"pub const ORIGIN_AI_BI_XI15_Y08: f64 = {mp.nstr(oab, 20)};")
