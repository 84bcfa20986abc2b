"""Assembly of the four dense boundary operator matrices.

For a sampled boundary (see helmbem.geometry) and wavenumber k > 0 the
toolkit uses four N-by-N complex matrices.  With H0, H1 the first-kind
Hankel functions, r_ij the distance between the points named below, and the
grid quantities of GridGeometry:

  single layer       V[i,j] = (i/4) H0(k |m_i - me_j|)
  double layer       K[i,j] = (i k/4) H1(k |m_i - m_j|) (m_i - m_j).n_j / r_ij
                     K[i,i] = s2_i.n_i / (4 pi ell_i^2)
  adjoint dbl layer  J[i,j] = (i k/4) H1(k |me_i - me_j|) (me_j - me_i).ne_i / r_ij
                     J[i,i] = s2e_i.ne_i / (4 pi elle_i^2)
  hypersingular      W[i,j] = Vt[nx(i),nx(j)] + Vt[i,j] - Vt[nx(i),j] - Vt[i,nx(j)]
                              - k^2 (ne_i . n_j) V[j,i]
  with               Vt[i,j] = (i/4) H0(k |be_i - b_j|)

where nx is the next-index permutation.  The diagonals of K and J are the
curvature limits of the off-diagonal kernels and are real; the difference
part of W telescopes to zero against constant vectors because nx permutes
each component's indices.

The normals attached to the off-diagonal kernels of K and J (column index
n_j for K, row index ne_i for J) follow the continuous kernels these
matrices discretize; swapping them breaks the discrete Calderon identity at
first order, which the test suite checks.  `flipped_normals=True` assembles
the swapped variant for that comparison.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .backends import active as _backend
from .geometry import GridGeometry

logger = logging.getLogger(__name__)

_FOUR_PI = 4.0 * np.pi


class AssemblyError(ValueError):
    """Raised when kernel assembly hits coincident sample points."""


@dataclass(frozen=True)
class OperatorSet:
    """The four operator matrices for one wavenumber on one grid."""

    k: float
    Vh: np.ndarray
    Kh: np.ndarray
    Jh: np.ndarray
    Wh: np.ndarray
    grid: GridGeometry = field(repr=False)


def _check_k(k: float):
    if not (np.isfinite(k) and k > 0):
        raise ValueError(f"wavenumber k must be positive and finite, got {k}")


def _check_distinct(ax, ay, bx, by, what: str, same_grid: bool = False):
    """Abort with an index diagnostic if any source/target pair coincides."""
    r = np.hypot(ax[:, None] - bx[None, :], ay[:, None] - by[None, :])
    if same_grid:
        np.fill_diagonal(r, np.inf)
    scale = max(np.abs(ax).max(), np.abs(ay).max(), np.abs(bx).max(), np.abs(by).max(), 1.0)
    i, j = np.unravel_index(np.argmin(r), r.shape)
    if r[i, j] <= 1e-13 * scale:
        raise AssemblyError(
            f"{what}: sample points {int(i) + 1} and {int(j) + 1} coincide "
            f"(distance {r[i, j]:.3e}); the sampled curve is degenerate")


def assemble_V(grid: GridGeometry, k: float) -> np.ndarray:
    """Single-layer matrix V[i,j] = (i/4) H0(k |m_i - me_j|)."""
    _check_k(k)
    _check_distinct(grid.m[:, 0], grid.m[:, 1], grid.me[:, 0], grid.me[:, 1],
                    "single-layer assembly")
    return _backend.kernel_single(grid.m[:, 0], grid.m[:, 1],
                                  grid.me[:, 0], grid.me[:, 1], k)


def assemble_K(grid: GridGeometry, k: float, flipped_normals: bool = False) -> np.ndarray:
    """Double-layer matrix on the main grid; see module docstring.

    flipped_normals=True attaches the normal to the row index instead of the
    column index (diagnostic variant; see module docstring).
    """
    _check_k(k)
    _check_distinct(grid.m[:, 0], grid.m[:, 1], grid.m[:, 0], grid.m[:, 1],
                    "double-layer assembly", same_grid=True)
    K = _backend.kernel_dipole(grid.m[:, 0], grid.m[:, 1], grid.m[:, 0], grid.m[:, 1],
                               grid.n[:, 0], grid.n[:, 1], k,
                               normal_on="row" if flipped_normals else "col",
                               diff="row-col", exclude_diag=True)
    diag = np.einsum("ij,ij->i", grid.s2, grid.n) / (_FOUR_PI * grid.ell ** 2)
    K[np.diag_indices_from(K)] = diag
    return K


def assemble_J(grid: GridGeometry, k: float, flipped_normals: bool = False) -> np.ndarray:
    """Adjoint double-layer matrix on the companion grid; see module docstring."""
    _check_k(k)
    _check_distinct(grid.me[:, 0], grid.me[:, 1], grid.me[:, 0], grid.me[:, 1],
                    "adjoint double-layer assembly", same_grid=True)
    J = _backend.kernel_dipole(grid.me[:, 0], grid.me[:, 1], grid.me[:, 0], grid.me[:, 1],
                               grid.ne[:, 0], grid.ne[:, 1], k,
                               normal_on="col" if flipped_normals else "row",
                               diff="col-row", exclude_diag=True)
    diag = np.einsum("ij,ij->i", grid.s2e, grid.ne) / (_FOUR_PI * grid.elle ** 2)
    J[np.diag_indices_from(J)] = diag
    return J


def assemble_W(grid: GridGeometry, k: float, V: np.ndarray | None = None) -> np.ndarray:
    """Hypersingular matrix; reuses a precomputed V when provided."""
    _check_k(k)
    _check_distinct(grid.be[:, 0], grid.be[:, 1], grid.b[:, 0], grid.b[:, 1],
                    "hypersingular assembly")
    Vt = _backend.kernel_single(grid.be[:, 0], grid.be[:, 1],
                                grid.b[:, 0], grid.b[:, 1], k)
    if V is None:
        V = assemble_V(grid, k)
    nx = grid.next_idx
    W = Vt[np.ix_(nx, nx)] + Vt - Vt[nx, :] - Vt[:, nx]
    W -= (k * k) * (grid.ne @ grid.n.T) * V.T
    return W


def assemble_all(grid: GridGeometry, k: float, flipped_normals: bool = False) -> OperatorSet:
    """Assemble the full operator set, sharing V between the pieces."""
    V = assemble_V(grid, k)
    K = assemble_K(grid, k, flipped_normals)
    J = assemble_J(grid, k, flipped_normals)
    W = assemble_W(grid, k, V=V)
    return OperatorSet(k=float(k), Vh=V, Kh=K, Jh=J, Wh=W, grid=grid)


def dump_matrix(matrix: np.ndarray, fh) -> None:
    """Write a complex matrix as plain text, row-major, one "re,im" pair per
    entry, entries separated by single spaces (debugging aid)."""
    close = False
    if isinstance(fh, (str, bytes)):
        fh = open(fh, "w")
        close = True
    try:
        for row in np.atleast_2d(matrix):
            fh.write(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row))
            fh.write("\n")
    finally:
        if close:
            fh.close()
