"""Accuracy and interface tests for the cylinder-function evaluators.

The reference values come from ``tests/data/specfun_reference.csv`` and
``tests/bessel_ref.py``, both of which evaluate the ascending power series
in adaptive extended precision (mpmath).  That is a different algorithm and
a different arithmetic from the production code, so agreement is a real
cross-check rather than a tautology.
"""

import math
import pathlib

import numpy as np
import pytest

from helmbem import (
    backend_name,
    bessel_j0,
    bessel_j1,
    bessel_y0,
    bessel_y1,
    hankel1_0,
    hankel1_1,
)
from helmbem.backends import load_compiled, pure

from bessel_ref import ref_all, ref_h1

DATA = pathlib.Path(__file__).parent / "data" / "specfun_reference.csv"

REL_TOL = 1e-10
WRONSKIAN_TOL = 1e-9


def _reference():
    table = np.loadtxt(DATA, delimiter=",", comments="#")
    assert table.shape == (10_000, 5)
    return table


def _rel(a, b):
    return np.abs(a - b) / np.abs(b)


def test_reference_grid_accuracy():
    """All four real kernels stay within 1e-10 relative error on 10k points."""
    table = _reference()
    x = table[:, 0]
    for col, fn in ((1, bessel_j0), (2, bessel_j1), (3, bessel_y0), (4, bessel_y1)):
        err = _rel(fn(x), table[:, col]).max()
        assert err <= REL_TOL, f"column {col}: max relative error {err:.3e}"


def test_hankel_matches_reference_components():
    """H_n^(1) = J_n + i Y_n, so the complex evaluators inherit the accuracy."""
    table = _reference()
    x = table[:, 0]
    h0 = hankel1_0(x)
    h1 = hankel1_1(x)
    assert _rel(h0.real, table[:, 1]).max() <= REL_TOL
    assert _rel(h0.imag, table[:, 3]).max() <= REL_TOL
    assert _rel(h1.real, table[:, 2]).max() <= REL_TOL
    assert _rel(h1.imag, table[:, 4]).max() <= REL_TOL


def test_wronskian_identity():
    """J1*Y0 - J0*Y1 = 2/(pi x) holds to 1e-9 across the working range."""
    x = np.logspace(-4, math.log10(200.0), 10_000)
    w = bessel_j1(x) * bessel_y0(x) - bessel_j0(x) * bessel_y1(x)
    target = 2.0 / (np.pi * x)
    assert _rel(w, target).max() <= WRONSKIAN_TOL


def test_spot_values():
    """Fixed-point checks, including values away from the origin."""
    assert bessel_j0(0.0) == 1.0
    assert bessel_j1(0.0) == 0.0
    assert abs(bessel_j0(1.0) - 0.7651976865579666) <= 1e-15
    assert abs(bessel_y0(1.0) - 0.08825696421567696) <= 1e-15
    # Near the origin Y0 grows like (2/pi) log(x/2); H0 = J0 + i Y0.
    h = hankel1_0(1e-4)
    assert abs(h.real - 0.9999999975) <= 1e-12
    assert abs(h.imag - (-5.937289069709337)) <= 1e-12
    # At the top of the range the scaled modulus of H1 is close to 1.
    mod = abs(hankel1_1(200.0)) * math.sqrt(math.pi * 200.0 / 2.0)
    assert abs(mod - 1.0000046873791629) <= 1e-12


def test_against_live_oracle():
    """A fresh extended-precision evaluation agrees at awkward arguments."""
    for x in (3.831705970207512, 11.791534439014281, 55.0, 199.99):
        j0r, j1r, y0r, y1r = ref_all(x)
        assert abs(bessel_j0(x) - j0r) <= 1e-13 * max(abs(j0r), 1e-3)
        assert abs(bessel_j1(x) - j1r) <= 1e-13 * max(abs(j1r), 1e-3)
        assert abs(bessel_y0(x) - y0r) <= 1e-12 * max(abs(y0r), 1e-3)
        assert abs(bessel_y1(x) - y1r) <= 1e-12 * max(abs(y1r), 1e-3)
    h1r = ref_h1(200.0)
    assert abs(hankel1_1(200.0) - h1r) <= 1e-12


def test_h0_derivative_is_minus_h1():
    """d/dx H0(x) = -H1(x), checked with a five-point central stencil."""
    h = 1e-3
    for x in (0.3, 1.7, 8.0, 60.0):
        stencil = (
            hankel1_0(x - 2 * h)
            - 8 * hankel1_0(x - h)
            + 8 * hankel1_0(x + h)
            - hankel1_0(x + 2 * h)
        ) / (12 * h)
        assert abs(stencil + hankel1_1(x)) <= 1e-9 * max(1.0, abs(hankel1_1(x)))


def test_branch_continuity():
    """Both internal branches agree where the implementation switches over."""
    from helmbem.backends import active

    for which in ("j0", "j1", "y0", "y1"):
        lo, hi = active.branch_values(which, 5.0)
        assert abs(lo - hi) <= 1e-10 * max(1.0, abs(hi)), which


def test_scalar_and_array_shapes():
    """Scalars map to Python floats/complex, arrays keep their shape."""
    assert isinstance(bessel_j0(2.0), float)
    assert isinstance(hankel1_0(2.0), complex)
    x = np.linspace(0.5, 3.0, 12).reshape(3, 4)
    for fn in (bessel_j0, bessel_j1, bessel_y0, bessel_y1):
        assert fn(x).shape == (3, 4)
    assert hankel1_1(x).dtype == np.complex128


def test_negative_and_zero_arguments():
    """J is extended by parity; Y and H require strictly positive x."""
    assert bessel_j0(-3.0) == bessel_j0(3.0)
    assert bessel_j1(-3.0) == -bessel_j1(3.0)
    for fn in (bessel_y0, bessel_y1, hankel1_0, hankel1_1):
        with pytest.raises(ValueError):
            fn(0.0)
        with pytest.raises(ValueError):
            fn(-1.0)
        with pytest.raises(ValueError):
            fn(np.array([1.0, -2.0]))


def test_nonfinite_arguments_rejected():
    for fn in (bessel_j0, bessel_j1, bessel_y0, bessel_y1, hankel1_0, hankel1_1):
        with pytest.raises(ValueError):
            fn(np.nan)
        with pytest.raises(ValueError):
            fn(np.inf)


def test_backends_agree():
    """The compiled and NumPy backends are numerically interchangeable."""
    compiled = load_compiled()
    if compiled is None:
        pytest.skip("compiled backend not built")
    x = np.logspace(-4, math.log10(200.0), 4001)
    for name in ("j0", "j1", "y0", "y1"):
        a = getattr(compiled, name)(x)
        b = getattr(pure, name)(x)
        assert _rel(a, b).max() <= 5e-15, name
    for name in ("h0", "h1"):
        a = getattr(compiled, name)(x)
        b = getattr(pure, name)(x)
        assert np.abs(a - b).max() <= 5e-15 * np.abs(b).max(), name


def test_backend_name_reports_selection():
    assert backend_name() in ("compiled", "pure")
