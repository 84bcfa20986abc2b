"""NumPy backend: vectorized Bessel/Hankel evaluators and dense kernel assembly.

This is the pure-Python reference backend.  `helmbem.backends` prefers the
compiled extension with the same entry points and falls back to this module
when the extension is not importable (or when HELMBEM_PURE=1).

The Bessel evaluators use two branches meeting at x = 5:

* series region (0, 5]: Chebyshev fits in w = x**2, with the zeros of J0 and
  J1 divided out as exact linear factors so relative accuracy survives next
  to them; Y0 and Y1 carry their logarithmic parts explicitly;
* modulus/phase region [5, inf): slowly varying amplitudes p, q fitted in
  v = (5/x)**2, recombined against cos(x) and sin(x) directly -- the phase
  shifts by pi/4 and 3*pi/4 are folded into the linear combinations, which
  avoids computing x - c in double precision (that subtraction alone would
  cost ~1e-14 of phase near x = 200).

Coefficient provenance and fitted-function definitions: tools/gen_coeffs.py.
"""

import numpy as np

from .. import _coeffs as _C

NAME = "pure"

_SWITCH = 5.0
_TWO_OVER_PI = 0.6366197723675814


def _clenshaw(coeffs, u):
    b1 = np.zeros_like(u)
    b2 = np.zeros_like(u)
    two_u = 2.0 * u
    for c in coeffs[:0:-1]:
        b1, b2 = two_u * b1 - b2 + c, b1
    return u * b1 - b2 + coeffs[0]


# ----- series region ---------------------------------------------------------

def _j0_small(x):
    w = x * x
    u = w * 0.08 - 1.0
    f0 = ((x - _C.J0_ROOT0_HI) - _C.J0_ROOT0_LO) * ((x + _C.J0_ROOT0_HI) + _C.J0_ROOT0_LO)
    f1 = ((x - _C.J0_ROOT1_HI) - _C.J0_ROOT1_LO) * ((x + _C.J0_ROOT1_HI) + _C.J0_ROOT1_LO)
    return f0 * f1 * _clenshaw(_C.J0_SMALL, u)


def _j1_small(x):
    w = x * x
    u = w * 0.08 - 1.0
    f0 = ((x - _C.J1_ROOT0_HI) - _C.J1_ROOT0_LO) * ((x + _C.J1_ROOT0_HI) + _C.J1_ROOT0_LO)
    return x * f0 * _clenshaw(_C.J1_SMALL, u)


def _y0_small(x):
    u = (x * x) * 0.08 - 1.0
    return _TWO_OVER_PI * np.log(x) * _j0_small(x) + _clenshaw(_C.Y0_SMALL, u)


def _y1_small(x):
    u = (x * x) * 0.08 - 1.0
    return _TWO_OVER_PI * (np.log(x) * _j1_small(x) - 1.0 / x) + x * _clenshaw(_C.Y1_SMALL, u)


# ----- modulus/phase region --------------------------------------------------

def _j0_large(x):
    u = 50.0 / (x * x) - 1.0
    p = _clenshaw(_C.P0_ASYM, u)
    q = _clenshaw(_C.Q0_ASYM, u)
    a = 1.0 / np.sqrt(np.pi * x)
    cx, sx = np.cos(x), np.sin(x)
    return a * (p * (cx + sx) + (5.0 / x) * q * (cx - sx))


def _y0_large(x):
    u = 50.0 / (x * x) - 1.0
    p = _clenshaw(_C.P0_ASYM, u)
    q = _clenshaw(_C.Q0_ASYM, u)
    a = 1.0 / np.sqrt(np.pi * x)
    cx, sx = np.cos(x), np.sin(x)
    return a * (p * (sx - cx) + (5.0 / x) * q * (cx + sx))


def _j1_large(x):
    u = 50.0 / (x * x) - 1.0
    p = _clenshaw(_C.P1_ASYM, u)
    q = _clenshaw(_C.Q1_ASYM, u)
    a = 1.0 / np.sqrt(np.pi * x)
    cx, sx = np.cos(x), np.sin(x)
    return a * (p * (sx - cx) + (5.0 / x) * q * (sx + cx))


def _y1_large(x):
    u = 50.0 / (x * x) - 1.0
    p = _clenshaw(_C.P1_ASYM, u)
    q = _clenshaw(_C.Q1_ASYM, u)
    a = 1.0 / np.sqrt(np.pi * x)
    cx, sx = np.cos(x), np.sin(x)
    return a * ((5.0 / x) * q * (sx - cx) - p * (sx + cx))


def _piecewise(small, large, x):
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    lo = x <= _SWITCH
    if lo.any():
        out[lo] = small(x[lo])
    if (~lo).any():
        out[~lo] = large(x[~lo])
    return out


def j0(x):
    return _piecewise(_j0_small, _j0_large, x)


def j1(x):
    return _piecewise(_j1_small, _j1_large, x)


def y0(x):
    return _piecewise(_y0_small, _y0_large, x)


def y1(x):
    return _piecewise(_y1_small, _y1_large, x)


def h0(x):
    """H0^(1)(x) = J0 + i Y0, elementwise."""
    x = np.asarray(x, dtype=np.float64)
    out = np.empty(x.shape, dtype=np.complex128)
    lo = x <= _SWITCH
    if lo.any():
        xs = x[lo]
        out[lo] = _j0_small(xs) + 1j * _y0_small(xs)
    if (~lo).any():
        xl = x[~lo]
        u = 50.0 / (xl * xl) - 1.0
        p = _clenshaw(_C.P0_ASYM, u)
        q5 = (5.0 / xl) * _clenshaw(_C.Q0_ASYM, u)
        a = 1.0 / np.sqrt(np.pi * xl)
        cx, sx = np.cos(xl), np.sin(xl)
        out[~lo] = a * ((p * (cx + sx) + q5 * (cx - sx))
                        + 1j * (p * (sx - cx) + q5 * (cx + sx)))
    return out


def h1(x):
    """H1^(1)(x) = J1 + i Y1, elementwise."""
    x = np.asarray(x, dtype=np.float64)
    out = np.empty(x.shape, dtype=np.complex128)
    lo = x <= _SWITCH
    if lo.any():
        xs = x[lo]
        out[lo] = _j1_small(xs) + 1j * _y1_small(xs)
    if (~lo).any():
        xl = x[~lo]
        u = 50.0 / (xl * xl) - 1.0
        p = _clenshaw(_C.P1_ASYM, u)
        q5 = (5.0 / xl) * _clenshaw(_C.Q1_ASYM, u)
        a = 1.0 / np.sqrt(np.pi * xl)
        cx, sx = np.cos(xl), np.sin(xl)
        out[~lo] = a * ((p * (sx - cx) + q5 * (sx + cx))
                        + 1j * (q5 * (sx - cx) - p * (sx + cx)))
    return out


def branch_values(which, x):
    """Evaluate both internal branches of one function at x (for testing).

    Returns (series_value, modulus_phase_value); only meaningful where both
    branches are usable, i.e. near the switch point.
    """
    small, large = {
        "j0": (_j0_small, _j0_large),
        "j1": (_j1_small, _j1_large),
        "y0": (_y0_small, _y0_large),
        "y1": (_y1_small, _y1_large),
    }[which]
    x = np.asarray(x, dtype=np.float64)
    return small(x), large(x)


# ----- dense kernel assembly -------------------------------------------------

def kernel_single(ax, ay, bx, by, k, exclude_diag=False):
    """Matrix M[i, j] = (i/4) H0^(1)(k |a_i - b_j|).

    With exclude_diag=True the (square) diagonal is left at zero, for kernels
    sampled on a single grid whose diagonal is defined by a separate limit
    formula.
    """
    dx = ax[:, None] - bx[None, :]
    dy = ay[:, None] - by[None, :]
    r = np.hypot(dx, dy)
    if exclude_diag:
        np.fill_diagonal(r, 1.0)
    m = 0.25j * h0(k * r)
    if exclude_diag:
        np.fill_diagonal(m, 0.0)
    return m


def kernel_dipole(ax, ay, bx, by, nx, ny, k, normal_on, diff, exclude_diag=False):
    """Matrix of (i k / 4) H1^(1)(k r) (d . n) / r dipole interactions.

    r = |a_i - b_j|; `normal_on` selects whether n is indexed by the row
    ("row": n_i) or the column ("col": n_j); `diff` selects d = a_i - b_j
    ("row-col") or d = b_j - a_i ("col-row").
    """
    dx = ax[:, None] - bx[None, :]
    dy = ay[:, None] - by[None, :]
    if diff == "col-row":
        dx = -dx
        dy = -dy
    elif diff != "row-col":
        raise ValueError(f"diff must be 'row-col' or 'col-row', got {diff!r}")
    if normal_on == "row":
        dot = dx * nx[:, None] + dy * ny[:, None]
    elif normal_on == "col":
        dot = dx * nx[None, :] + dy * ny[None, :]
    else:
        raise ValueError(f"normal_on must be 'row' or 'col', got {normal_on!r}")
    r = np.hypot(dx, dy)
    if exclude_diag:
        np.fill_diagonal(r, 1.0)
    m = (0.25j * k) * h1(k * r) * (dot / r)
    if exclude_diag:
        np.fill_diagonal(m, 0.0)
    return m
