"""Reference values for the Ramsey module.

1. gamma(tau) by direct radial quadrature of the shell average (no change of
   variables), 30 digits.
2. Large-N revival contrast exp(-p_d kappa int_0^inf (1 - cos((w + eta w^2) tau)) / w^2 dw),
   i.e. the N -> inf limit of |p_g + p_d gamma|^(N-1) at C0 tau = 2 pi k.
3. Symbolic three-atom expansion of the per-atom product average.
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 30


def gamma_radial(C0, C3, C6, r_outer, r_b, tau):
    U = lambda r: C0 + C3 / r ** 3 + C6 / r ** 6
    pts = mp.linspace(r_b, r_outer, 400)
    re = mp.quad(lambda r: r * r * mp.cos(U(r) * tau), pts)
    im = mp.quad(lambda r: r * r * mp.sin(U(r) * tau), pts)
    norm = 3 / (r_outer ** 3 - r_b ** 3)
    return norm * re, norm * im


for tau in ["0.4", "1.3", "3.7"]:
    g = gamma_radial(mp.mpf("0.7"), mp.mpf("2.5"), mp.mpf("1.0"), mp.mpf(3), mp.mpf("0.6"), mp.mpf(tau))
    print(f"gamma_shell(tau={tau}) = {mp.nstr(g[0], 20)}, {mp.nstr(g[1], 20)}")


def revival_contrast(kappa, eta, p_d, tau):
    # Past the first cosine zero w1 the integrand is split into 1/w^2 (exact) and
    # cos/w^2, whose lobes alternate and can be extrapolated.
    f = lambda w: (1 - mp.cos((w + eta * w * w) * tau)) / (w * w)
    g = lambda w: mp.cos((w + eta * w * w) * tau) / (w * w)
    zs = lambda k: (-1 + mp.sqrt(1 + 4 * eta * (mp.pi / 2 + k * mp.pi) / tau)) / (2 * eta)
    head = mp.quad(f, [0, zs(0)])
    tail = 1 / zs(0) - mp.nsum(lambda k: mp.quad(g, [zs(k), zs(k + 1)]), [0, mp.inf])
    return mp.exp(-p_d * kappa * (head + tail))


kappa = 4 * mp.pi * mp.mpf("0.35") * mp.mpf("2.5") / 3
eta = mp.mpf(10) / mp.mpf("2.5") ** 2
for k in [1, 2, 3]:
    v = revival_contrast(kappa, eta, mp.mpf("0.05"), 2 * mp.pi * k)
    print(f"revival_contrast(k={k}) = {mp.nstr(v, 20)}")

t, pd = sp.symbols("tau p_d", real=True)
pg = 1 - pd
U01, U02, U12 = sp.Rational(3, 10), sp.Rational(-11, 10), sp.Rational(12, 5)
z = lambda u: pg + pd * sp.exp(sp.I * u * t)
G = sp.expand((z(U01) * z(U02) + z(U01) * z(U12) + z(U02) * z(U12)) / 3)
val = complex(G.subs({t: sp.Rational(7, 10), pd: sp.Rational(3, 10)}).evalf(30))
print(f"three_atom_G(tau=0.7,p_d=0.3) = {val.real!r}, {val.imag!r}")
