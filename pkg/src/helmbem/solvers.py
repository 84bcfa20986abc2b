"""Boundary-integral solvers built on the staggered-grid operator matrices.

Eight exterior solvers cover the Dirichlet and Neumann problems, each with a
direct formulation (the unknown is the missing Cauchy datum) and an indirect
one (the unknown is an auxiliary layer density):

    name     system                                representation
    dD01h    Vh lam           = (-I/2 + Kh) beta0   U = D beta0 - S lam
    dD02h    (I/2 + Jh) lam   = -Wh beta0           U = D beta0 - S lam
    dN01h    (-I/2 + Kh) phi  = Vh beta1            U = D phi - S beta1
    dN02h    Wh phi           = -(I/2 + Jh) beta1   U = D phi - S beta1
    iD01h    Vh eta           = beta0               U = S eta
    iD02h    (I/2 + Kh) psi   = beta0               U = D psi
    iN01h    (-I/2 + Jh) eta  = beta1               U = S eta
    iN02h    Wh psi           = -beta1              U = D psi

beta0 carries Dirichlet data sampled at the main points, beta1 carries
Neumann data sampled against the h-scaled companion normals; see
`potentials.incident_traces`.  Every returned Solution normalizes its field
to the Cauchy form U = D(dipole) - S(charge) so evaluation is uniform.

The transmission solver couples an exterior wavenumber k with an interior
one contrast*k through a 2N x 2N system in the interior Cauchy pair, and the
combined-field solver (`solve_burton_miller`) mixes the V and J rows with a
complex coupling constant so the system stays invertible at every k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import GridGeometry
from .linsolve import lu_factor
from .operators import OperatorSet, assemble_all
from .potentials import Density, IncidentField, eval_D, eval_S, incident_traces

EXTERIOR_METHODS = ("dD01h", "dD02h", "dN01h", "dN02h",
                    "iD01h", "iD02h", "iN01h", "iN02h")

#: method name -> (data vector it consumes, family, unknown name, unknown kind)
METHOD_INFO = {
    "dD01h": ("beta0", "direct", "lambda", "charge"),
    "dD02h": ("beta0", "direct", "lambda", "charge"),
    "dN01h": ("beta1", "direct", "phi", "dipole"),
    "dN02h": ("beta1", "direct", "phi", "dipole"),
    "iD01h": ("beta0", "indirect", "eta", "charge"),
    "iD02h": ("beta0", "indirect", "psi", "dipole"),
    "iN01h": ("beta1", "indirect", "eta", "charge"),
    "iN02h": ("beta1", "indirect", "psi", "dipole"),
}


def normalize_method(name: str) -> str:
    """Map a user spelling (case-insensitive, optional trailing h) to canonical."""
    s = str(name).strip()
    for canon in EXTERIOR_METHODS:
        if s.lower() in (canon.lower(), canon.lower()[:-1]):
            return canon
    raise ValueError(f"unknown method {name!r}; expected one of {', '.join(EXTERIOR_METHODS)}")


@dataclass
class Solution:
    """Result of one boundary-integral solve.

    densities holds the method's named unknowns (and derived densities);
    rep_dipole / rep_charge define the radiated field in the uniform Cauchy
    convention U = D(rep_dipole) - S(rep_charge), either possibly absent.
    The field is valid in the exterior of the boundary; inside, it tends to
    zero with the discretization (null-field property).
    """

    method: str
    k: float
    grid: GridGeometry
    densities: dict
    rep_dipole: Optional[Density] = None
    rep_charge: Optional[Density] = None
    diagnostics: dict = field(default_factory=dict)

    def field(self, z, clearance_factor: float = 10.0):
        """Evaluate the represented field at z ((2,) point or (P, 2) array)."""
        out = None
        if self.rep_dipole is not None:
            out = eval_D(self.grid, self.k, self.rep_dipole, z, clearance_factor)
        if self.rep_charge is not None:
            s = eval_S(self.grid, self.k, self.rep_charge, z, clearance_factor)
            out = -s if out is None else out - s
        if out is None:
            raise ValueError("solution carries no representation densities")
        return out

    def pointwise(self, name: str) -> np.ndarray:
        """A named density in pointwise form (charges are divided by h)."""
        den = self.densities[name]
        if den.kind == "charge":
            return den.coeffs / self.grid.h
        return den.coeffs.copy()


def _diag(fac, extra=None):
    d = {"cond": fac.cond, "rcond": fac.rcond, "warnings": list(fac.warnings)}
    if extra:
        d.update(extra)
    return d


def _data_vector(data, grid, what):
    v = np.ascontiguousarray(np.asarray(data), dtype=np.complex128).reshape(-1)
    if v.shape[0] != grid.size:
        raise ValueError(f"{what}: data length {v.shape[0]} != grid size {grid.size}")
    return v


def solve_exterior(grid: GridGeometry, k: float, method: str, data,
                   ops: Optional[OperatorSet] = None) -> Solution:
    """Solve one of the eight exterior formulations.

    `data` is beta0 for the Dirichlet-data methods (dD01h, dD02h, iD01h,
    iD02h) and beta1 for the Neumann-data ones (dN01h, dN02h, iN01h, iN02h).
    Pass a precomputed OperatorSet via `ops` to share matrices across solves
    at the same (grid, k).
    """
    method = normalize_method(method)
    if ops is None:
        ops = assemble_all(grid, k)
    elif ops.grid is not grid or ops.k != k:
        raise ValueError("ops was assembled for a different grid or wavenumber")
    beta = _data_vector(data, grid, method)
    N = grid.size
    I = np.eye(N)

    if method == "dD01h":
        A, rhs = ops.Vh, (ops.Kh - 0.5 * I) @ beta
    elif method == "dD02h":
        A, rhs = 0.5 * I + ops.Jh, -(ops.Wh @ beta)
    elif method == "dN01h":
        A, rhs = ops.Kh - 0.5 * I, ops.Vh @ beta
    elif method == "dN02h":
        A, rhs = ops.Wh, -((0.5 * I + ops.Jh) @ beta)
    elif method == "iD01h":
        A, rhs = ops.Vh, beta
    elif method == "iD02h":
        A, rhs = 0.5 * I + ops.Kh, beta
    elif method == "iN01h":
        A, rhs = ops.Jh - 0.5 * I, beta
    else:  # iN02h
        A, rhs = ops.Wh, -beta

    fac = lu_factor(A)
    x = fac.solve(rhs)
    _, family, unknown, kind = METHOD_INFO[method]
    den = Density(x, kind)
    densities = {unknown: den}

    if family == "direct":
        if unknown == "lambda":
            rep_dipole, rep_charge = Density(beta, "dipole"), den
        else:
            rep_dipole, rep_charge = den, Density(beta, "charge")
    else:
        if method in ("iD01h", "iN01h"):
            # U = +S eta, expressed as D*0 - S*(-eta)
            rep_dipole, rep_charge = None, Density(-x, "charge")
        else:
            rep_dipole, rep_charge = den, None

    return Solution(method=method, k=float(k), grid=grid, densities=densities,
                    rep_dipole=rep_dipole, rep_charge=rep_charge,
                    diagnostics=_diag(fac, {"family": family, "unknown": unknown}))


# ----- transmission -----------------------------------------------------------

@dataclass
class TransmissionSolution:
    """Interior Cauchy pair (phi, lam) of a two-medium problem.

    phi approximates the interior trace of the transmitted field; lam / h
    approximates (1 / alpha) times its parametric normal derivative.
    exterior() radiates with wavenumber k, interior() with contrast * k.
    """

    k: float
    contrast: float
    alpha: float
    grid: GridGeometry
    phi: Density
    lam: Density
    beta0: np.ndarray
    beta1: np.ndarray
    diagnostics: dict = field(default_factory=dict)

    @property
    def k_interior(self):
        return self.contrast * self.k

    def exterior(self, z, clearance_factor: float = 10.0):
        """Scattered exterior field: D_k(phi - beta0) - S_k(lam - beta1)."""
        dip = Density(self.phi.coeffs - self.beta0, "dipole")
        chg = Density(self.lam.coeffs - self.beta1, "charge")
        return (eval_D(self.grid, self.k, dip, z, clearance_factor)
                - eval_S(self.grid, self.k, chg, z, clearance_factor))

    def interior(self, z, clearance_factor: float = 10.0):
        """Transmitted interior field: S_{ki}(alpha * lam) - D_{ki}(phi)."""
        ki = self.k_interior
        chg = Density(self.alpha * self.lam.coeffs, "charge")
        return (eval_S(self.grid, ki, chg, z, clearance_factor)
                - eval_D(self.grid, ki, self.phi, z, clearance_factor))


def solve_transmission(grid: GridGeometry, k: float, contrast: float, alpha,
                       beta0, beta1,
                       ops: Optional[OperatorSet] = None,
                       ops_interior: Optional[OperatorSet] = None) -> TransmissionSolution:
    """Solve the two-medium problem with jump data (beta0, beta1).

    The interior medium carries wavenumber contrast * k, and the conormal
    flux of the transmitted field enters the matching condition with weight
    1 / alpha; beta0 is the jump of traces at the main points and beta1 the
    jump of (h-scaled) conormal derivatives at the companion points.  The
    2N x 2N system couples both media's operator sets through the interior
    Cauchy pair (phi, lam), where lam / h approximates (1 / alpha) times
    the parametric normal derivative of the transmitted field.
    """
    if not (np.isfinite(contrast) and contrast > 0):
        raise ValueError(f"contrast must be positive and finite, got {contrast}")
    alpha = complex(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if alpha.imag == 0.0:
        alpha = alpha.real
    ki = contrast * k
    if ops is None:
        ops = assemble_all(grid, k)
    if ops_interior is None:
        ops_interior = assemble_all(grid, ki)
    b0 = _data_vector(beta0, grid, "transmission beta0")
    b1 = _data_vector(beta1, grid, "transmission beta1")
    N = grid.size
    I = np.eye(N)

    A = np.empty((2 * N, 2 * N), dtype=np.complex128)
    A[:N, :N] = ops.Wh + ops_interior.Wh / alpha
    A[:N, N:] = ops.Jh + ops_interior.Jh
    A[N:, :N] = -(ops.Kh + ops_interior.Kh)
    A[N:, N:] = ops.Vh + alpha * ops_interior.Vh

    rhs = np.empty(2 * N, dtype=np.complex128)
    rhs[:N] = ops.Wh @ b0 + (0.5 * I + ops.Jh) @ b1
    rhs[N:] = (0.5 * I - ops.Kh) @ b0 + ops.Vh @ b1

    fac = lu_factor(A)
    x = fac.solve(rhs)
    return TransmissionSolution(
        k=float(k), contrast=float(contrast), alpha=alpha, grid=grid,
        phi=Density(x[:N], "dipole"), lam=Density(x[N:], "charge"),
        beta0=b0, beta1=b1, diagnostics=_diag(fac))


# ----- combined-field (resonance-proof) sound-soft solver ----------------------

def solve_burton_miller(grid: GridGeometry, k: float, fieldobj: IncidentField,
                        coupling=None, ops: Optional[OperatorSet] = None,
                        scaled_coupling: bool = False) -> Solution:
    """Sound-soft scattering via a combined normal-derivative/trace equation.

    Solves (I/2 + Jh + c Vh) xi = beta1 + c beta0 where (beta0, beta1) are
    the incident field's traces and c is a complex coupling constant with
    nonzero imaginary part (default -1j*k), which keeps the system
    invertible at every real wavenumber.  The scattered field is U = -S xi,
    and the Neumann datum of the total field is recoverable as
    lambda = xi - beta1.  With scaled_coupling=True the trace row enters
    with weight c*h instead of c, matching the h-scaling of the
    normal-derivative row.
    """
    c = -1j * k if coupling is None else complex(coupling)
    if c.imag == 0.0:
        raise ValueError(f"coupling must have nonzero imaginary part, got {coupling}")
    if ops is None:
        ops = assemble_all(grid, k)
    elif ops.grid is not grid or ops.k != k:
        raise ValueError("ops was assembled for a different grid or wavenumber")
    beta0, beta1 = incident_traces(fieldobj, grid)
    N = grid.size
    # per-row coupling weight: the trace row enters equation i with weight
    # ceff[i] (constant in the default reading, c*h_i in the scaled one)
    ceff = c * grid.h if scaled_coupling else np.full(N, c)
    A = 0.5 * np.eye(N) + ops.Jh + ceff[:, None] * ops.Vh
    rhs = beta1 + ceff * beta0
    fac = lu_factor(A)
    xi = fac.solve(rhs)
    den = Density(xi, "charge")
    densities = {"xi": den, "lambda": Density(xi - beta1, "charge")}
    # scattered field U = -S xi  ==  D*0 - S*(+xi)
    return Solution(method="burton-miller", k=float(k), grid=grid,
                    densities=densities, rep_dipole=None, rep_charge=den,
                    diagnostics=_diag(fac, {"coupling": c,
                                            "scaled_coupling": bool(scaled_coupling),
                                            "beta0": beta0, "beta1": beta1}))
