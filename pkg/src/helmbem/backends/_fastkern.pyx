# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled backend: scalar Bessel evaluators and tight dense-assembly loops.

Entry-point-compatible with helmbem.backends.pure; see that module for the
branch layout of the evaluators and tools/gen_coeffs.py for the coefficient
tables.  Do not compile this file with -ffast-math: the evaluators rely on
compensated subtractions against split double-double constants.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, log, sin, sqrt

from .. import _coeffs as _C

cnp.import_array()

NAME = "compiled"

DEF MAXC = 40

cdef double J0S[MAXC]
cdef double J1S[MAXC]
cdef double Y0S[MAXC]
cdef double Y1S[MAXC]
cdef double P0A[MAXC]
cdef double Q0A[MAXC]
cdef double P1A[MAXC]
cdef double Q1A[MAXC]
cdef Py_ssize_t NJ0S, NJ1S, NY0S, NY1S, NP0A, NQ0A, NP1A, NQ1A

cdef double R0H = _C.J0_ROOT0_HI
cdef double R0L = _C.J0_ROOT0_LO
cdef double R1H = _C.J0_ROOT1_HI
cdef double R1L = _C.J0_ROOT1_LO
cdef double S0H = _C.J1_ROOT0_HI
cdef double S0L = _C.J1_ROOT0_LO

cdef double PI = 3.141592653589793
cdef double TWO_OVER_PI = 0.6366197723675814
cdef double SWITCH = 5.0


cdef Py_ssize_t _load(double* dst, object src) except -1:
    cdef Py_ssize_t i, n = len(src)
    if n > MAXC:
        raise ValueError("coefficient table longer than compiled-in bound")
    for i in range(n):
        dst[i] = src[i]
    return n

NJ0S = _load(J0S, _C.J0_SMALL)
NJ1S = _load(J1S, _C.J1_SMALL)
NY0S = _load(Y0S, _C.Y0_SMALL)
NY1S = _load(Y1S, _C.Y1_SMALL)
NP0A = _load(P0A, _C.P0_ASYM)
NQ0A = _load(Q0A, _C.Q0_ASYM)
NP1A = _load(P1A, _C.P1_ASYM)
NQ1A = _load(Q1A, _C.Q1_ASYM)


cdef inline double clenshaw(const double* c, Py_ssize_t n, double u) noexcept nogil:
    cdef double b1 = 0.0, b2 = 0.0, t
    cdef Py_ssize_t i
    for i in range(n - 1, 0, -1):
        t = 2.0 * u * b1 - b2 + c[i]
        b2 = b1
        b1 = t
    return u * b1 - b2 + c[0]


cdef inline double j0_small(double x) noexcept nogil:
    cdef double u = (x * x) * 0.08 - 1.0
    cdef double f0 = ((x - R0H) - R0L) * ((x + R0H) + R0L)
    cdef double f1 = ((x - R1H) - R1L) * ((x + R1H) + R1L)
    return f0 * f1 * clenshaw(J0S, NJ0S, u)


cdef inline double j1_small(double x) noexcept nogil:
    cdef double u = (x * x) * 0.08 - 1.0
    cdef double f0 = ((x - S0H) - S0L) * ((x + S0H) + S0L)
    return x * f0 * clenshaw(J1S, NJ1S, u)


cdef inline double y0_small(double x) noexcept nogil:
    cdef double u = (x * x) * 0.08 - 1.0
    return TWO_OVER_PI * log(x) * j0_small(x) + clenshaw(Y0S, NY0S, u)


cdef inline double y1_small(double x) noexcept nogil:
    cdef double u = (x * x) * 0.08 - 1.0
    return TWO_OVER_PI * (log(x) * j1_small(x) - 1.0 / x) + x * clenshaw(Y1S, NY1S, u)


cdef inline double j0_large(double x) noexcept nogil:
    cdef double u = 50.0 / (x * x) - 1.0
    cdef double p = clenshaw(P0A, NP0A, u)
    cdef double q5 = (5.0 / x) * clenshaw(Q0A, NQ0A, u)
    cdef double a = 1.0 / sqrt(PI * x)
    cdef double cx = cos(x), sx = sin(x)
    return a * (p * (cx + sx) + q5 * (cx - sx))


cdef inline double y0_large(double x) noexcept nogil:
    cdef double u = 50.0 / (x * x) - 1.0
    cdef double p = clenshaw(P0A, NP0A, u)
    cdef double q5 = (5.0 / x) * clenshaw(Q0A, NQ0A, u)
    cdef double a = 1.0 / sqrt(PI * x)
    cdef double cx = cos(x), sx = sin(x)
    return a * (p * (sx - cx) + q5 * (cx + sx))


cdef inline double j1_large(double x) noexcept nogil:
    cdef double u = 50.0 / (x * x) - 1.0
    cdef double p = clenshaw(P1A, NP1A, u)
    cdef double q5 = (5.0 / x) * clenshaw(Q1A, NQ1A, u)
    cdef double a = 1.0 / sqrt(PI * x)
    cdef double cx = cos(x), sx = sin(x)
    return a * (p * (sx - cx) + q5 * (sx + cx))


cdef inline double y1_large(double x) noexcept nogil:
    cdef double u = 50.0 / (x * x) - 1.0
    cdef double p = clenshaw(P1A, NP1A, u)
    cdef double q5 = (5.0 / x) * clenshaw(Q1A, NQ1A, u)
    cdef double a = 1.0 / sqrt(PI * x)
    cdef double cx = cos(x), sx = sin(x)
    return a * (q5 * (sx - cx) - p * (sx + cx))


cdef inline double j0_s(double x) noexcept nogil:
    return j0_small(x) if x <= SWITCH else j0_large(x)

cdef inline double j1_s(double x) noexcept nogil:
    return j1_small(x) if x <= SWITCH else j1_large(x)

cdef inline double y0_s(double x) noexcept nogil:
    return y0_small(x) if x <= SWITCH else y0_large(x)

cdef inline double y1_s(double x) noexcept nogil:
    return y1_small(x) if x <= SWITCH else y1_large(x)

cdef inline double complex h0_s(double x) noexcept nogil:
    cdef double u, p, q5, a, cx, sx
    if x <= SWITCH:
        return j0_small(x) + 1j * y0_small(x)
    u = 50.0 / (x * x) - 1.0
    p = clenshaw(P0A, NP0A, u)
    q5 = (5.0 / x) * clenshaw(Q0A, NQ0A, u)
    a = 1.0 / sqrt(PI * x)
    cx = cos(x)
    sx = sin(x)
    return a * ((p * (cx + sx) + q5 * (cx - sx)) + 1j * (p * (sx - cx) + q5 * (cx + sx)))

cdef inline double complex h1_s(double x) noexcept nogil:
    cdef double u, p, q5, a, cx, sx
    if x <= SWITCH:
        return j1_small(x) + 1j * y1_small(x)
    u = 50.0 / (x * x) - 1.0
    p = clenshaw(P1A, NP1A, u)
    q5 = (5.0 / x) * clenshaw(Q1A, NQ1A, u)
    a = 1.0 / sqrt(PI * x)
    cx = cos(x)
    sx = sin(x)
    return a * ((p * (sx - cx) + q5 * (sx + cx)) + 1j * (q5 * (sx - cx) - p * (sx + cx)))


# ----- python-visible vectorized wrappers -----------------------------------

ctypedef double (*scalar_fn)(double) noexcept nogil


cdef _map(scalar_fn fn, object x):
    arr = np.asarray(x, dtype=np.float64)
    flat = np.ascontiguousarray(arr.reshape(-1))
    out = np.empty_like(flat)
    cdef double[::1] xin = flat
    cdef double[::1] xout = out
    cdef Py_ssize_t i, n = xin.shape[0]
    with nogil:
        for i in range(n):
            xout[i] = fn(xin[i])
    return out.reshape(arr.shape)


def j0(x):
    return _map(j0_s, x)

def j1(x):
    return _map(j1_s, x)

def y0(x):
    return _map(y0_s, x)

def y1(x):
    return _map(y1_s, x)


def h0(x):
    """H0^(1)(x) = J0 + i Y0, elementwise."""
    arr = np.asarray(x, dtype=np.float64)
    flat = np.ascontiguousarray(arr.reshape(-1))
    out = np.empty(flat.shape[0], dtype=np.complex128)
    cdef double[::1] xin = flat
    cdef double complex[::1] xout = out
    cdef Py_ssize_t i, n = xin.shape[0]
    with nogil:
        for i in range(n):
            xout[i] = h0_s(xin[i])
    return out.reshape(arr.shape)


def h1(x):
    """H1^(1)(x) = J1 + i Y1, elementwise."""
    arr = np.asarray(x, dtype=np.float64)
    flat = np.ascontiguousarray(arr.reshape(-1))
    out = np.empty(flat.shape[0], dtype=np.complex128)
    cdef double[::1] xin = flat
    cdef double complex[::1] xout = out
    cdef Py_ssize_t i, n = xin.shape[0]
    with nogil:
        for i in range(n):
            xout[i] = h1_s(xin[i])
    return out.reshape(arr.shape)


def branch_values(which, x):
    """Evaluate both internal branches of one function at x (for testing)."""
    cdef scalar_fn lo
    cdef scalar_fn hi
    if which == "j0":
        lo, hi = j0_small, j0_large
    elif which == "j1":
        lo, hi = j1_small, j1_large
    elif which == "y0":
        lo, hi = y0_small, y0_large
    elif which == "y1":
        lo, hi = y1_small, y1_large
    else:
        raise ValueError(f"unknown function {which!r}")
    return _map(lo, x), _map(hi, x)


# ----- dense kernel assembly -------------------------------------------------

def kernel_single(ax, ay, bx, by, double k, bint exclude_diag=False):
    """Matrix M[i, j] = (i/4) H0^(1)(k |a_i - b_j|).

    With exclude_diag=True the (square) diagonal is left at zero, for kernels
    sampled on a single grid whose diagonal is defined by a separate limit
    formula.
    """
    cdef double[::1] avx = np.ascontiguousarray(ax, dtype=np.float64)
    cdef double[::1] avy = np.ascontiguousarray(ay, dtype=np.float64)
    cdef double[::1] bvx = np.ascontiguousarray(bx, dtype=np.float64)
    cdef double[::1] bvy = np.ascontiguousarray(by, dtype=np.float64)
    cdef Py_ssize_t na = avx.shape[0], nb = bvx.shape[0]
    out = np.empty((na, nb), dtype=np.complex128)
    cdef double complex[:, ::1] m = out
    cdef Py_ssize_t i, j
    cdef double dx, dy, r
    with nogil:
        for i in range(na):
            for j in range(nb):
                if exclude_diag and i == j:
                    m[i, j] = 0.0
                    continue
                dx = avx[i] - bvx[j]
                dy = avy[i] - bvy[j]
                r = sqrt(dx * dx + dy * dy)
                m[i, j] = 0.25j * h0_s(k * r)
    return out


def kernel_dipole(ax, ay, bx, by, nx, ny, double k, normal_on, diff,
                  bint exclude_diag=False):
    """Matrix of (i k / 4) H1^(1)(k r) (d . n) / r dipole interactions.

    r = |a_i - b_j|; `normal_on` selects whether n is indexed by the row
    ("row": n_i) or the column ("col": n_j); `diff` selects d = a_i - b_j
    ("row-col") or d = b_j - a_i ("col-row").
    """
    cdef double[::1] avx = np.ascontiguousarray(ax, dtype=np.float64)
    cdef double[::1] avy = np.ascontiguousarray(ay, dtype=np.float64)
    cdef double[::1] bvx = np.ascontiguousarray(bx, dtype=np.float64)
    cdef double[::1] bvy = np.ascontiguousarray(by, dtype=np.float64)
    cdef double[::1] nvx = np.ascontiguousarray(nx, dtype=np.float64)
    cdef double[::1] nvy = np.ascontiguousarray(ny, dtype=np.float64)
    cdef bint on_row
    if normal_on == "row":
        on_row = True
    elif normal_on == "col":
        on_row = False
    else:
        raise ValueError(f"normal_on must be 'row' or 'col', got {normal_on!r}")
    cdef double sign
    if diff == "row-col":
        sign = 1.0
    elif diff == "col-row":
        sign = -1.0
    else:
        raise ValueError(f"diff must be 'row-col' or 'col-row', got {diff!r}")
    cdef Py_ssize_t na = avx.shape[0], nb = bvx.shape[0]
    out = np.empty((na, nb), dtype=np.complex128)
    cdef double complex[:, ::1] m = out
    cdef Py_ssize_t i, j
    cdef double dx, dy, r, dot
    cdef double complex pref = 0.25j * k
    with nogil:
        for i in range(na):
            for j in range(nb):
                if exclude_diag and i == j:
                    m[i, j] = 0.0
                    continue
                dx = sign * (avx[i] - bvx[j])
                dy = sign * (avy[i] - bvy[j])
                if on_row:
                    dot = dx * nvx[i] + dy * nvy[i]
                else:
                    dot = dx * nvx[j] + dy * nvy[j]
                r = sqrt(dx * dx + dy * dy)
                m[i, j] = pref * h1_s(k * r) * (dot / r)
    return out
