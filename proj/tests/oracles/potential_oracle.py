"""Cavity coupling, vdW radius and potential coefficients from SI constants at 40 digits.

Independent of the library: everything is evaluated from the defining formulas in SI
and converted to rad/us, um at the end.
"""
import mpmath as mp

mp.mp.dps = 40
a0 = mp.mpf("5.29177210903e-11")
e = mp.mpf("1.602176634e-19")
eps0 = mp.mpf("8.8541878128e-12")
hbar = mp.mpf("1.054571817e-34")
c = mp.mpf("299792458")
twopi = 2 * mp.pi


def ang(f_hz):  # ordinary frequency in Hz -> rad/s
    return twopi * f_hz


def case(name, omega_d_hz, delta_hz, Delta_hz, mu_a, mu_b, V_m3=None):
    wd = ang(omega_d_hz)
    d = ang(delta_hz)
    D = ang(Delta_hz)
    w = wd - d
    if V_m3 is None:
        lam = twopi * c / w
        V_m3 = (lam / 2) ** 3
    ga = mu_a * a0 * e * mp.sqrt(w / (2 * eps0 * V_m3 * hbar))
    gb = mu_b * a0 * e * mp.sqrt(w / (2 * eps0 * V_m3 * hbar))
    Upref = mu_a * mu_b * (a0 * e) ** 2 / (4 * mp.pi * eps0 * hbar)  # rad/s m^3
    Jpref = mu_a * mu_a * (a0 * e) ** 2 / (4 * mp.pi * eps0 * hbar)
    C6 = 2 * Upref ** 2 / D
    C3 = 4 * Upref * ga * gb / (D * d) + 2 * Jpref * ga ** 2 / d ** 2
    C0 = 2 * (ga * gb) ** 2 / (D * d ** 2) + 2 * ga ** 4 / d ** 3
    R = mp.cbrt(abs(d) * V_m3 / (4 * mp.pi * w))
    r0 = mp.sqrt(2) * mp.cbrt(Upref / abs(D))
    # |C3/r^3| = |C6/r^6|; equals R / cbrt|1 + D/(2d)| only for equal dipoles
    r1 = mp.cbrt(abs(C6 / C3))
    if mu_a == mu_b:
        assert abs(r1 / (R / mp.cbrt(abs(1 + D / (2 * d)))) - 1) < mp.mpf("1e-25")
    # numeric r2 from |C3 s + C6 s^2| = |C0|, smallest positive s
    h = lambda s: abs(C3 * s + C6 * s * s) - abs(C0)
    s = abs(C0) / (4 * abs(C3)) if C3 != 0 else mp.sqrt(abs(C0 / C6)) / 4
    while h(s) < 0:
        s *= mp.mpf("1.01")
    r2s = mp.findroot(h, (s / mp.mpf("1.01"), s), solver="anderson")
    r2n = 1 / mp.cbrt(r2s)
    to_us = mp.mpf("1e-6")
    um = mp.mpf("1e6")
    out = {
        "omega_cav": w * to_us,
        "V_um3": V_m3 * um ** 3,
        "g_a": ga * to_us,
        "g_b": gb * to_us,
        "C0": C0 * to_us,
        "C3": C3 * to_us * um ** 3,
        "C6": C6 * to_us * um ** 6,
        "R": R * um,
        "r0": r0 * um,
        "r1": r1 * um,
        "r2_numeric": r2n * um,
    }
    for k, v in out.items():
        print(f"{name}.{k} = {mp.nstr(v, 20)}")


print(f"dipole_dipole_scale = {mp.nstr((a0 * e) ** 2 / (4 * mp.pi * eps0 * hbar) * mp.mpf('1e12'), 20)}")
# Row-like inputs: omega_d = 2pi 1.7 THz, delta = 2pi 0.12 GHz, Delta = 2pi 31 GHz, mu = 100.
case("row12D", mp.mpf("1.7e12"), mp.mpf("0.12e9"), mp.mpf("31e9"), 100, 100)
# Unequal dipoles, negative cavity detuning, explicit volume.
case("mixed", mp.mpf("0.5e12"), mp.mpf("-0.8e9"), mp.mpf("3.5e9"), 220, 140, V_m3=mp.mpf("2.5e-9"))
# Synthetic vdW-radius case: cavity at 2pi 1.7 THz, delta = 2pi 0.12 GHz, V = (lambda/2)^3.
wcav = ang(mp.mpf("1.7e12"))
lam = twopi * c / wcav
V = (lam / 2) ** 3
R = mp.cbrt(ang(mp.mpf("0.12e9")) * V / (4 * mp.pi * wcav))
print(f"synthetic.R = {mp.nstr(R * mp.mpf('1e6'), 20)}")
print(f"synthetic.V_um3 = {mp.nstr(V * mp.mpf('1e18'), 20)}")
