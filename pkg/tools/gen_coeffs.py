#!/usr/bin/env python3
"""Regenerate src/helmbem/_coeffs.py.

Fits Chebyshev expansions for the order-0/1 Bessel evaluators:

* on (0, 5]   -- series region, expansions in w = x^2 over [0, 25], with the
                 zeros of J0/J1 divided out so the evaluators keep full
                 relative accuracy next to them;
* on [5, inf) -- modulus/phase region, expansions in v = (5/x)^2 of the
                 slowly varying amplitude functions p, q defined by
                     Jn = sqrt(2/(pi x)) [p cos(x - cn) - (5/x) q sin(x - cn)]
                     Yn = sqrt(2/(pi x)) [p sin(x - cn) + (5/x) q cos(x - cn)]
                 with c0 = pi/4, c1 = 3pi/4.

All sampling is done with mpmath at 60 digits; coefficients are truncated
where they stop mattering at double precision (|c| < 1e-19 * scale).

Run from the repository root:  python3 tools/gen_coeffs.py
"""

import pathlib

import mpmath as mp

mp.mp.dps = 60

M_SAMPLES = 256
TAIL_TOL = mp.mpf("1e-19")


def cheb_coeffs(f, m=M_SAMPLES):
    """First-kind Chebyshev coefficients of f on u in [-1, 1]."""
    nodes = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / m) for k in range(m)]
    fv = [f(u) for u in nodes]
    cs = []
    for j in range(m):
        acc = mp.mpf(0)
        for k in range(m):
            acc += fv[k] * mp.cos(j * mp.pi * (k + mp.mpf(1) / 2) / m)
        cs.append(2 * acc / m)
    cs[0] /= 2
    return cs


def truncate(cs, label):
    scale = max(abs(c) for c in cs)
    deg = len(cs) - 1
    while deg > 0 and abs(cs[deg]) < TAIL_TOL * scale:
        deg -= 1
    tail = max(abs(c) for c in cs[deg + 1 : deg + 40]) / scale
    print(f"  {label}: degree {deg}, dropped tail {mp.nstr(tail, 3)} of scale")
    return cs[: deg + 1]


def split_double(v):
    hi = float(v)
    lo = float(v - mp.mpf(hi))
    return hi, lo


def j(n, x):
    return mp.besselj(n, x)


def y(n, x):
    return mp.bessely(n, x)


# ----- series region: w = x^2 in [0, 25] -----------------------------------

print("series region fits (w = x^2 on [0, 25]):")

R0 = mp.findroot(lambda t: j(0, t), mp.mpf("2.404825557695773"))
R1 = mp.findroot(lambda t: j(0, t), mp.mpf("5.520078110286311"))
S0 = mp.findroot(lambda t: j(1, t), mp.mpf("3.831705970207512"))


def u_to_w(u):
    return (u + 1) * mp.mpf(25) / 2


def g_j0(u):
    w = u_to_w(u)
    x = mp.sqrt(w)
    return j(0, x) / ((w - R0 ** 2) * (w - R1 ** 2)) if w > 0 else None


def g_j1(u):
    w = u_to_w(u)
    x = mp.sqrt(w)
    return j(1, x) / (x * (w - S0 ** 2))


def g_y0(u):
    w = u_to_w(u)
    x = mp.sqrt(w)
    return y(0, x) - 2 / mp.pi * mp.log(x) * j(0, x)


def g_y1(u):
    w = u_to_w(u)
    x = mp.sqrt(w)
    return (y(1, x) - 2 / mp.pi * (mp.log(x) * j(1, x) - 1 / x)) / x


J0S = truncate(cheb_coeffs(g_j0), "J0 regular part")
J1S = truncate(cheb_coeffs(g_j1), "J1 regular part")
Y0S = truncate(cheb_coeffs(g_y0), "Y0 regular part")
Y1S = truncate(cheb_coeffs(g_y1), "Y1 regular part")

# ----- modulus/phase region: v = (5/x)^2 in (0, 1] --------------------------

print("modulus/phase region fits (v = (5/x)^2 on [0, 1]):")


def pq(n, u):
    v = (u + 1) / 2
    x = 5 / mp.sqrt(v)
    cn = mp.pi / 4 if n == 0 else 3 * mp.pi / 4
    om = x - cn
    amp = mp.sqrt(mp.pi * x / 2)
    p = amp * (j(n, x) * mp.cos(om) + y(n, x) * mp.sin(om))
    q = amp * (y(n, x) * mp.cos(om) - j(n, x) * mp.sin(om)) * x / 5
    return p, q


def fit_pq(n):
    nodes = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / M_SAMPLES) for k in range(M_SAMPLES)]
    vals = [pq(n, u) for u in nodes]
    out = []
    for comp, label in ((0, f"P{n}"), (1, f"Q{n}")):
        cs = []
        for jj in range(M_SAMPLES):
            acc = mp.mpf(0)
            for k in range(M_SAMPLES):
                acc += vals[k][comp] * mp.cos(jj * mp.pi * (k + mp.mpf(1) / 2) / M_SAMPLES)
            cs.append(2 * acc / M_SAMPLES)
        cs[0] /= 2
        out.append(truncate(cs, label))
    return out


P0, Q0 = fit_pq(0)
P1, Q1 = fit_pq(1)

# ----- emit ------------------------------------------------------------------

r0h, r0l = split_double(R0)
r1h, r1l = split_double(R1)
s0h, s0l = split_double(S0)

out = pathlib.Path(__file__).resolve().parent.parent / "src" / "helmbem" / "_coeffs.py"


def fmt(name, cs):
    body = ",\n    ".join(repr(float(c)) for c in cs)
    return f"{name} = (\n    {body},\n)\n"


with out.open("w") as fh:
    fh.write('"""Chebyshev coefficient tables for the Bessel evaluators.\n\n')
    fh.write("Machine generated by tools/gen_coeffs.py -- do not edit by hand.\n")
    fh.write("See that script for the definitions of the fitted functions.\n")
    fh.write('"""\n\n')
    fh.write("# first roots of J0 and J1, split into double-double pairs\n")
    fh.write(f"J0_ROOT0_HI = {r0h!r}\nJ0_ROOT0_LO = {r0l!r}\n")
    fh.write(f"J0_ROOT1_HI = {r1h!r}\nJ0_ROOT1_LO = {r1l!r}\n")
    fh.write(f"J1_ROOT0_HI = {s0h!r}\nJ1_ROOT0_LO = {s0l!r}\n\n")
    fh.write("# series region (w = x^2 on [0, 25]), Chebyshev in u = 2w/25 - 1\n")
    fh.write(fmt("J0_SMALL", J0S))
    fh.write(fmt("J1_SMALL", J1S))
    fh.write(fmt("Y0_SMALL", Y0S))
    fh.write(fmt("Y1_SMALL", Y1S))
    fh.write("\n# modulus/phase region (v = (5/x)^2 on (0, 1]), Chebyshev in u = 2v - 1\n")
    fh.write(fmt("P0_ASYM", P0))
    fh.write(fmt("Q0_ASYM", Q0))
    fh.write(fmt("P1_ASYM", P1))
    fh.write(fmt("Q1_ASYM", Q1))

print(f"wrote {out}")
