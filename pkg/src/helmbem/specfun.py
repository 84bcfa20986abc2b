"""Bessel functions J0, J1, Y0, Y1 and first-kind Hankel functions H0, H1.

Public, checked wrappers around the active kernel backend.  Scalars in give
scalars out; array-likes are evaluated elementwise.  Accuracy contract:
relative error at most 1e-10 against the extended-precision series oracle on
[1e-4, 200] (the measured worst case is below 2e-12; see the test suite).

The Y and Hankel functions are defined only for x > 0 (logarithmic
singularity at the origin); the J functions accept any finite real argument
via their even/odd symmetry.
"""

import numpy as np

from .backends import active as _backend


def backend_name():
    """Name of the kernel backend in use ("compiled" or "pure")."""
    return _backend.NAME


def _prepare(x, positive, name):
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} requires finite arguments")
    if positive and np.any(arr <= 0.0):
        raise ValueError(f"{name} requires x > 0")
    return arr


def _ret(val, x):
    return val.item() if np.isscalar(x) or np.ndim(x) == 0 else val


def bessel_j0(x):
    """Bessel function of the first kind, order 0."""
    arr = _prepare(x, False, "bessel_j0")
    return _ret(_backend.j0(np.abs(arr)), x)


def bessel_j1(x):
    """Bessel function of the first kind, order 1 (odd in x)."""
    arr = _prepare(x, False, "bessel_j1")
    return _ret(np.sign(arr) * _backend.j1(np.abs(arr)), x)


def bessel_y0(x):
    """Bessel function of the second kind, order 0; x > 0."""
    arr = _prepare(x, True, "bessel_y0")
    return _ret(_backend.y0(arr), x)


def bessel_y1(x):
    """Bessel function of the second kind, order 1; x > 0."""
    arr = _prepare(x, True, "bessel_y1")
    return _ret(_backend.y1(arr), x)


def hankel1_0(x):
    """Hankel function of the first kind, order 0: J0 + i Y0; x > 0."""
    arr = _prepare(x, True, "hankel1_0")
    return _ret(_backend.h0(arr), x)


def hankel1_1(x):
    """Hankel function of the first kind, order 1: J1 + i Y1; x > 0."""
    arr = _prepare(x, True, "hankel1_1")
    return _ret(_backend.h1(arr), x)
