"""Kernel backend selection.

Two interchangeable implementations of the special-function/assembly layer
exist: a Cython extension (`_fastkern`) and a vectorized NumPy module
(`pure`).  The extension is preferred when importable; setting the
environment variable HELMBEM_PURE=1 forces the NumPy backend.  Both expose
the same entry points (j0, j1, y0, y1, h0, h1, branch_values,
kernel_single, kernel_dipole) with identical semantics.
"""

import os

from . import pure

if os.environ.get("HELMBEM_PURE"):
    active = pure
else:
    try:
        from . import _fastkern as active
    except ImportError:
        active = pure


def load_compiled():
    """The compiled backend module, or None if it cannot be imported."""
    try:
        from . import _fastkern
    except ImportError:
        return None
    return _fastkern


__all__ = ["active", "pure", "load_compiled"]
