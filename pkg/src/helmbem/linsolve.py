"""Dense complex linear algebra for the collocation systems.

All boundary-integral systems assembled by this package are dense, complex,
and moderately sized (N or 2N unknowns), so an LU factorization with partial
pivoting is the right tool.  The factorization is delegated to LAPACK
(zgetrf / zgecon / zgetrs via scipy); this module adds the diagnostics the
solvers rely on:

* an exactly singular matrix raises SingularMatrixError naming the pivot
  step that failed, with a hint that for boundary systems this typically
  means the wavenumber sits at (or close to) an interior resonance of the
  chosen formulation -- perturb k or switch method;
* a finite but huge condition number (> 1e12) attaches a warning, since the
  computed densities may carry fewer correct digits than the discretization
  delivers.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import lapack as _lapack

COND_WARN_THRESHOLD = 1e12

RESONANCE_HINT = ("matrix is exactly singular (zero pivot at elimination step {step}); "
                  "for a boundary system this usually means k sits at an interior "
                  "resonance of this formulation -- perturb k slightly or switch to a "
                  "combined-field method")


class SingularMatrixError(np.linalg.LinAlgError):
    """LU factorization hit a zero pivot."""

    def __init__(self, step):
        self.pivot_step = int(step)
        super().__init__(RESONANCE_HINT.format(step=self.pivot_step))


@dataclass
class LUFactor:
    """LU factorization A = P^T L U of a square complex matrix.

    lu packs the unit-lower and upper triangles; piv holds 0-based LAPACK
    pivot indices.  rcond is the 1-norm reciprocal condition estimate and
    warnings collects any diagnostics raised during factorization.
    """

    lu: np.ndarray
    piv: np.ndarray
    rcond: float
    anorm: float
    warnings: list = field(default_factory=list)

    @property
    def n(self):
        return self.lu.shape[0]

    @property
    def cond(self):
        return np.inf if self.rcond == 0.0 else 1.0 / self.rcond

    def permutation(self):
        """The row permutation P as an index vector: (P A)[i] = A[perm[i]]."""
        perm = np.arange(self.n)
        for i, p in enumerate(self.piv):
            perm[[i, p]] = perm[[p, i]]
        return perm

    def triangles(self):
        """(L, U) with unit diagonal on L, so that A[perm] = L @ U."""
        L = np.tril(self.lu, -1) + np.eye(self.n, dtype=self.lu.dtype)
        U = np.triu(self.lu)
        return L, U

    def solve(self, rhs):
        rhs = np.asarray(rhs, dtype=np.complex128)
        b = np.ascontiguousarray(rhs.reshape(self.n, -1), dtype=np.complex128)
        x, info = _lapack.zgetrs(self.lu, self.piv, b)
        if info != 0:
            raise np.linalg.LinAlgError(f"zgetrs failed with info={info}")
        return x.reshape(rhs.shape)


def lu_factor(A) -> LUFactor:
    """Factor a square complex matrix with partial pivoting.

    Raises SingularMatrixError on an exactly zero pivot; attaches a warning
    (also emitted via warnings.warn) when the estimated condition number
    exceeds 1e12.
    """
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"matrix must be square, got shape {A.shape}")
    if not np.all(np.isfinite(A.real)) or not np.all(np.isfinite(A.imag)):
        raise ValueError("matrix has nonfinite entries")
    A = np.ascontiguousarray(A, dtype=np.complex128)
    anorm = np.abs(A).sum(axis=0).max() if A.size else 0.0
    lu, piv, info = _lapack.zgetrf(A)
    if info > 0:
        raise SingularMatrixError(info)
    if info < 0:
        raise np.linalg.LinAlgError(f"zgetrf: illegal argument {-info}")
    rcond, info = _lapack.zgecon(lu, anorm, norm="1")
    if info != 0:
        raise np.linalg.LinAlgError(f"zgecon failed with info={info}")
    fac = LUFactor(lu=lu, piv=piv, rcond=float(rcond), anorm=float(anorm))
    if fac.cond > COND_WARN_THRESHOLD:
        msg = (f"linear system is ill conditioned (cond ~ {fac.cond:.2e}); "
               f"computed densities may be inaccurate -- likely near-resonant k")
        fac.warnings.append(msg)
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
    return fac


def lu_solve(A, rhs):
    """Solve A x = rhs (rhs a vector or a stack of columns)."""
    return lu_factor(A).solve(rhs)
