"""Reference values for the special functions, computed with mpmath at 30 digits."""
import mpmath as mp

mp.mp.dps = 30


def S(x):
    return mp.quad(lambda t: mp.sin(t * t), [0, x])


def C(x):
    return mp.quad(lambda t: mp.cos(t * t), [0, x])


def si_mod(beta, x):
    f = lambda t: mp.sin(t) / (t * mp.sqrt(beta * t + 1))
    if x == mp.inf:
        head = mp.quad(f, [0, mp.pi])
        return head + mp.nsum(lambda k: mp.quad(f, [k * mp.pi, (k + 1) * mp.pi]), [1, mp.inf])
    pts = [0] + [k * mp.pi for k in range(1, int(x / mp.pi) + 1)] + [x]
    return mp.quad(f, pts)


def ci_mod(beta, x):
    f = lambda t: mp.cos(t) / (t * mp.sqrt(beta * t + 1))
    k0 = int(mp.ceil((x - mp.pi / 2) / mp.pi))
    z0 = mp.pi / 2 + k0 * mp.pi
    head = mp.quad(f, [x, z0]) if z0 > x else 0
    tail = mp.nsum(lambda k: mp.quad(f, [z0 + k * mp.pi, z0 + (k + 1) * mp.pi]), [0, mp.inf])
    return -(head + tail)


values = {
    "S(1)": S(1),
    "C(1)": C(1),
    "S(3)": S(3),
    "C(3)": C(3),
    "Si(1)": mp.si(1),
    "Ci(1)": mp.ci(1),
    "Si(5)": mp.si(5),
    "Ci(5)": mp.ci(5),
    "Si_M(1,5)": si_mod(1, 5),
    "Ci_M(1,5)": ci_mod(1, 5),
    "Si_M(1,inf)": si_mod(1, mp.inf),
    "Si_M(0.3,200)": si_mod(mp.mpf("0.3"), 200),
    "Ci_M(0.3,1e-6)": ci_mod(mp.mpf("0.3"), mp.mpf("1e-6")),
}
for k, v in values.items():
    print(f"{k} = {mp.nstr(v, 22)}")
