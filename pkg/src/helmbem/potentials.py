"""Discrete layer potentials, incident fields, and boundary data sampling.

The discrete single and double layer potentials attached to a sampled
boundary are exact finite superpositions of radiating point sources and
dipoles:

    S(z) eta = sum_j (i/4) H0(k |z - me_j|) eta_j
    D(z) psi = sum_j (i k/4) H1(k |z - m_j|) (z - m_j).n_j / |z - m_j| psi_j

so both solve the Helmholtz equation exactly away from the boundary.  The
two density conventions matter throughout the toolkit:

* charge densities (eta, lambda, xi) sit on the companion grid and carry a
  factor h -- their pointwise values are h^{-1} coeff;
* dipole densities (psi, phi) sit on the main grid and are pointwise values;
  the factor h lives in the scaled normals n_j instead.

Boundary data vectors follow the same split: beta0 samples a field at the
main points m_j, beta1 samples its normal derivative against the h-scaled
companion normals ne_j.

Potential evaluation is only accurate at observation points some distance
from the boundary; eval_* enforce a clearance of clearance_factor * h *
max|x'| (default factor 10) and raise ClearanceError inside it.  Pass
clearance_factor=0 to evaluate regardless, e.g. for coarse-grid convergence
tables whose observation points are fixed a priori.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .backends import active as _backend
from .geometry import GridGeometry

DENSITY_KINDS = ("charge", "dipole")


class ClearanceError(ValueError):
    """Observation point too close to the sampled boundary."""

    def __init__(self, point, index, distance, threshold):
        self.point = tuple(point)
        self.index = int(index)
        self.distance = float(distance)
        self.threshold = float(threshold)
        super().__init__(
            f"observation point ({point[0]:g}, {point[1]:g}) lies {distance:.3e} "
            f"from sampled boundary point {self.index + 1}, inside the clearance "
            f"{threshold:.3e}; increase N, move the point, or lower clearance_factor")


@dataclass(frozen=True)
class Density:
    """Length-N complex coefficient vector with its convention tag.

    kind = "charge": h-scaled coefficients on the companion grid (inputs of
    the single-layer potential and of V/J); kind = "dipole": pointwise values
    on the main grid (inputs of the double-layer potential and of K/W).
    """

    coeffs: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in DENSITY_KINDS:
            raise ValueError(f"density kind must be one of {DENSITY_KINDS}, got {self.kind!r}")
        arr = np.ascontiguousarray(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError(f"density coefficients must be a nonempty vector, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __len__(self):
        return self.coeffs.shape[0]


def _require_kind(density: Density, kind: str, grid: GridGeometry, what: str):
    if density.kind != kind:
        raise ValueError(f"{what} takes a {kind} density, got {density.kind!r}")
    if len(density) != grid.size:
        raise ValueError(f"{what}: density length {len(density)} != grid size {grid.size}")


@dataclass(frozen=True)
class IncidentField:
    """An analytic Helmholtz field with value and gradient evaluators.

    value maps points of shape (..., 2) to complex values of shape (...);
    gradient maps them to complex arrays of shape (..., 2).
    """

    kind: str
    k: float
    value: Callable[[np.ndarray], np.ndarray]
    gradient: Callable[[np.ndarray], np.ndarray]
    params: dict = field(default_factory=dict, repr=False)


def point_source(x0, k: float) -> IncidentField:
    """Radiating point source U(z) = H0^(1)(k |z - x0|)."""
    x0 = np.asarray(x0, dtype=np.float64).reshape(2)
    if not (np.isfinite(k) and k > 0):
        raise ValueError(f"wavenumber k must be positive and finite, got {k}")

    def _r(z):
        z = np.asarray(z, dtype=np.float64)
        d = z - x0
        r = np.hypot(d[..., 0], d[..., 1])
        if np.any(r == 0.0):
            raise ValueError("point-source field evaluated at its own source point")
        return d, r

    def value(z):
        _, r = _r(z)
        return _backend.h0(k * r)

    def gradient(z):
        d, r = _r(z)
        scale = -k * _backend.h1(k * r) / r
        return scale[..., None] * d

    return IncidentField("point_source", float(k), value, gradient,
                         {"x0": (float(x0[0]), float(x0[1]))})


def plane_wave(d, k: float) -> IncidentField:
    """Plane wave U(z) = exp(i k z . d); d is normalized to |d| = 1."""
    d = np.asarray(d, dtype=np.float64).reshape(2)
    norm = np.hypot(d[0], d[1])
    if norm == 0.0 or not np.all(np.isfinite(d)):
        raise ValueError(f"plane-wave direction must be a nonzero finite vector, got {d}")
    if not (np.isfinite(k) and k > 0):
        raise ValueError(f"wavenumber k must be positive and finite, got {k}")
    d = d / norm

    def value(z):
        z = np.asarray(z, dtype=np.float64)
        return np.exp(1j * k * (z[..., 0] * d[0] + z[..., 1] * d[1]))

    def gradient(z):
        v = value(z)
        return np.stack([1j * k * d[0] * v, 1j * k * d[1] * v], axis=-1)

    return IncidentField("plane_wave", float(k), value, gradient,
                         {"d": (float(d[0]), float(d[1]))})


def incident_traces(fieldobj: IncidentField, grid: GridGeometry):
    """Sample a field into the data vectors (beta0, beta1).

    beta0_j = value(m_j) (pointwise, main grid); beta1_j = grad(me_j).ne_j
    (h-scaled through the companion normal).  Rejects a point source whose
    source point lies on the sampled boundary.
    """
    if fieldobj.kind == "point_source":
        x0 = np.asarray(fieldobj.params["x0"])
        dmin = min(np.hypot(*(pts - x0).T).min()
                   for pts in (grid.m, grid.b, grid.me, grid.be))
        if dmin < 1e-10 * (1.0 + np.abs(x0).max()):
            raise ValueError("point source lies on the sampled boundary")
    beta0 = fieldobj.value(grid.m)
    beta1 = np.einsum("ij,ij->i", fieldobj.gradient(grid.me), grid.ne)
    return beta0, beta1


# ----- observation-point clearance -------------------------------------------

def boundary_distances(grid: GridGeometry, z: np.ndarray):
    """(min distance, index of nearest sampled point) for each row of z."""
    z = np.atleast_2d(np.asarray(z, dtype=np.float64))
    pts = np.concatenate([grid.m, grid.b, grid.me, grid.be])
    d = np.hypot(z[:, None, 0] - pts[None, :, 0], z[:, None, 1] - pts[None, :, 1])
    idx = d.argmin(axis=1)
    return d[np.arange(len(z)), idx], idx % grid.size


def _checked_points(grid, z, clearance_factor, what):
    z = np.asarray(z, dtype=np.float64)
    single = z.ndim == 1
    zz = np.atleast_2d(z)
    if zz.shape[-1] != 2:
        raise ValueError(f"{what}: observation points must have shape (2,) or (P, 2)")
    if clearance_factor > 0.0:
        threshold = grid.clearance(clearance_factor)
        dist, idx = boundary_distances(grid, zz)
        bad = np.nonzero(dist <= threshold)[0]
        if bad.size:
            b = bad[0]
            raise ClearanceError(zz[b], idx[b], dist[b], threshold)
    return zz, single


def eval_S(grid: GridGeometry, k: float, eta: Density, z, clearance_factor: float = 10.0):
    """Discrete single-layer potential at z (a point or an array of points)."""
    _require_kind(eta, "charge", grid, "eval_S")
    zz, single = _checked_points(grid, z, clearance_factor, "eval_S")
    mat = _backend.kernel_single(zz[:, 0], zz[:, 1], grid.me[:, 0], grid.me[:, 1], k)
    out = mat @ eta.coeffs
    return out[0] if single else out


def eval_D(grid: GridGeometry, k: float, psi: Density, z, clearance_factor: float = 10.0):
    """Discrete double-layer potential at z (a point or an array of points)."""
    _require_kind(psi, "dipole", grid, "eval_D")
    zz, single = _checked_points(grid, z, clearance_factor, "eval_D")
    mat = _backend.kernel_dipole(zz[:, 0], zz[:, 1], grid.m[:, 0], grid.m[:, 1],
                                 grid.n[:, 0], grid.n[:, 1], k,
                                 normal_on="col", diff="row-col")
    out = mat @ psi.coeffs
    return out[0] if single else out


def eval_representation(grid: GridGeometry, k: float, phi: Density, lam: Density, z,
                        clearance_factor: float = 10.0):
    """Field of the Cauchy pair (phi, lam): D(z) phi - S(z) lam."""
    return (eval_D(grid, k, phi, z, clearance_factor)
            - eval_S(grid, k, lam, z, clearance_factor))


# ----- field-grid export ------------------------------------------------------

def write_field_csv(grid: GridGeometry, evaluator, lattice, fh,
                    clearance_factor: float = 10.0) -> int:
    """Evaluate a field on a rectangular lattice and write CSV rows "x,y,re,im".

    lattice = (xmin, xmax, ymin, ymax, nx, ny); points inside the clearance
    are emitted with empty value fields.  `evaluator` maps an array of points
    (P, 2) to complex values (P,).  Returns the number of evaluated points.
    """
    xmin, xmax, ymin, ymax, nx, ny = lattice
    nx, ny = int(nx), int(ny)
    if nx < 1 or ny < 1 or not (xmax >= xmin and ymax >= ymin):
        raise ValueError(f"invalid lattice spec {lattice!r}")
    xs = np.linspace(xmin, xmax, nx)
    ys = np.linspace(ymin, ymax, ny)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    pts = np.stack([gx.ravel(), gy.ravel()], axis=-1)
    threshold = grid.clearance(clearance_factor) if clearance_factor > 0 else 0.0
    if threshold > 0.0:
        dist, _ = boundary_distances(grid, pts)
        ok = dist > threshold
    else:
        ok = np.ones(len(pts), dtype=bool)
    vals = np.zeros(len(pts), dtype=np.complex128)
    if ok.any():
        vals[ok] = evaluator(pts[ok])
    close = False
    if isinstance(fh, (str, bytes)):
        fh = open(fh, "w")
        close = True
    try:
        fh.write("x,y,re,im\n")
        for (px, py), good, v in zip(pts, ok, vals):
            px, py = float(px), float(py)
            if good:
                fh.write(f"{px!r},{py!r},{float(v.real)!r},{float(v.imag)!r}\n")
            else:
                fh.write(f"{px!r},{py!r},,\n")
    finally:
        if close:
            fh.close()
    return int(ok.sum())
