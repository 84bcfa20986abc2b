"""Convergence studies: N-ladders, error tables with empirical rates, reports.

A study fixes a curve, a wavenumber, a method, and a manufactured solution,
then solves on a ladder of grid sizes and tabulates max-norm errors together
with empirical convergence rates e.c.r. = log2(error_prev / error_curr).

Manufactured solutions: the exterior field is a point source placed inside
the obstacle (default at the curve center (0.1, 0.2)), so it is a radiating
Helmholtz solution in the exterior with known traces; interior fields are
plane waves (entire solutions), default direction (1, 1)/sqrt(2).

Error columns per method family:

* the eight exterior solvers report E_density (max-norm pointwise density
  error; for direct methods against the exact missing Cauchy datum, for
  indirect methods the difference against the partner method that targets
  the same continuous density) and E_field (max |U - U_h| over the exterior
  observation points);
* transmission reports E_lambda, E_phi (interior Cauchy pair errors) and
  E_V (interior field error at the interior observation points);
* the combined-field solver reports E_U (the single-layer extension of xi
  must reproduce the incident field at interior points) and E_xi (pointwise
  difference of its recovered Neumann density against a direct Dirichlet
  solve of the same scattering problem);
* "calderon" reports the two residual rows of the discrete exterior
  projector applied to exact Cauchy data, max|r1| and max|r2|/h.

Observation-point metrics are evaluated with the clearance check disabled:
the tabulated points are fixed a priori and coarse ladder rungs would
otherwise refuse them.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields as dc_fields
from typing import Optional

import numpy as np

from . import specfun
from .geometry import DEFAULT_EPS, _check_eps, parse_curve_spec, sample_grids
from .operators import assemble_all
from .potentials import eval_S, incident_traces, plane_wave, point_source
from .solvers import (METHOD_INFO, normalize_method, solve_burton_miller,
                      solve_exterior, solve_transmission)

DEFAULT_LADDER = (10, 20, 40, 80, 160, 320, 640)

#: partner pairs of indirect methods whose unknowns share a continuous limit
INDIRECT_PARTNER = {"iD01h": "iN01h", "iN01h": "iD01h",
                    "iD02h": "iN02h", "iN02h": "iD02h"}

STUDY_COLUMNS = {
    "transmission": ("E_lambda", "E_phi", "E_V"),
    "burton-miller": ("E_U", "E_xi"),
    "calderon": ("r1", "r2_over_h"),
}


def normalize_study_method(name: str) -> str:
    """Canonical method token: one of the eight exterior names,
    'transmission', 'burton-miller', or 'calderon'."""
    s = str(name).strip().lower().replace("_", "-")
    if s in ("transmission", "trans"):
        return "transmission"
    if s in ("burton-miller", "burtonmiller", "bm", "combined"):
        return "burton-miller"
    if s == "calderon":
        return "calderon"
    return normalize_method(name)


class StudyError(RuntimeError):
    """A ladder rung failed; carries the offending N."""

    def __init__(self, N, message):
        self.N = int(N)
        super().__init__(f"study failed at N={N}: {message}")


_SQ2 = float(np.sqrt(0.5))


@dataclass
class StudyConfig:
    """Everything run_study needs; defaults match the reference experiments."""

    curve: str = "paper_ellipse"
    method: str = "iD01h"
    k: float = 3.0
    eps: float = DEFAULT_EPS
    ladder: tuple = DEFAULT_LADDER
    contrast: float = 2.0 / 3.0      # interior wavenumber is contrast * k
    alpha: complex = 1.5             # transmission flux weight
    coupling: complex = None         # combined-field coupling; None -> -1j*k
    x0: tuple = (0.1, 0.2)           # manufactured point-source location
    d: tuple = (_SQ2, _SQ2)          # plane-wave direction
    obs_exterior: tuple = ((3.0, 2.0), (-2.5, 1.5))
    obs_interior: tuple = ((0.2, 0.4), (-0.2, -0.4))
    out: str = "csv"
    scaled_coupling: bool = False
    allow_unstable: bool = False

    def validate(self) -> "StudyConfig":
        self.method = normalize_study_method(self.method)
        if not (np.isfinite(self.k) and self.k > 0):
            raise ValueError(f"k must be positive and finite, got {self.k}")
        ladder = tuple(int(n) for n in self.ladder)
        if not ladder:
            raise ValueError("N ladder must be nonempty")
        if any(n < 4 for n in ladder):
            raise ValueError(f"every ladder N must be >= 4, got {ladder}")
        if any(b <= a for a, b in zip(ladder, ladder[1:])):
            raise ValueError(f"N ladder must be strictly increasing, got {ladder}")
        self.ladder = ladder
        _check_eps(self.eps, self.allow_unstable)
        if not (np.isfinite(self.contrast) and self.contrast > 0):
            raise ValueError(f"contrast must be positive, got {self.contrast}")
        if self.coupling is None:
            self.coupling = -1j * self.k
        self.coupling = complex(self.coupling)
        if self.method == "burton-miller" and self.coupling.imag == 0.0:
            raise ValueError(
                f"coupling must have nonzero imaginary part, got {self.coupling}")
        if self.out not in ("csv", "json"):
            raise ValueError(f"output format must be csv or json, got {self.out!r}")
        for namepts in ("obs_exterior", "obs_interior"):
            pts = np.asarray(getattr(self, namepts), dtype=np.float64)
            if pts.ndim != 2 or pts.shape[1] != 2 or not np.all(np.isfinite(pts)):
                raise ValueError(f"{namepts} must be a list of finite 2D points")
            setattr(self, namepts, tuple((float(x), float(y)) for x, y in pts))
        return self

    def echo(self) -> str:
        parts = []
        for f in sorted(dc_fields(self), key=lambda f: f.name):
            parts.append(f"{f.name}={getattr(self, f.name)!r}")
        return " ".join(parts)


# ----- error rows per method family --------------------------------------------


def calderon_residuals(grid, k, beta0, beta1, ops=None):
    """Residual rows of the discrete exterior projector on a Cauchy pair.

    For exact Cauchy data of a radiating field both vanish as h^2:
    r1 = (I/2 - Kh) beta0 + Vh beta1,  r2 = Wh beta0 + (I/2 + Jh) beta1.
    """
    if ops is None:
        ops = assemble_all(grid, k)
    I = np.eye(grid.size)
    r1 = (0.5 * I - ops.Kh) @ beta0 + ops.Vh @ beta1
    r2 = ops.Wh @ beta0 + (0.5 * I + ops.Jh) @ beta1
    return r1, r2


def _row_exterior(cfg: StudyConfig, curve, N: int):
    U = point_source(cfg.x0, cfg.k)
    grid = sample_grids(curve, N, cfg.eps, cfg.allow_unstable)
    ops = assemble_all(grid, cfg.k)
    beta0, beta1 = incident_traces(U, grid)
    method = cfg.method
    data0 = beta0 if METHOD_INFO[method][0] == "beta0" else beta1
    sol = solve_exterior(grid, cfg.k, method, data0, ops)
    _, family, unknown, kind = METHOD_INFO[method]
    if family == "direct":
        if unknown == "lambda":
            e_dens = np.abs(sol.pointwise("lambda") - beta1 / grid.h).max()
        else:
            e_dens = np.abs(sol.pointwise("phi") - beta0).max()
    else:
        partner = INDIRECT_PARTNER[method]
        pdata = beta0 if METHOD_INFO[partner][0] == "beta0" else beta1
        sol2 = solve_exterior(grid, cfg.k, partner, pdata, ops)
        e_dens = np.abs(sol.pointwise(unknown) - sol2.pointwise(unknown)).max()
    zs = np.asarray(cfg.obs_exterior, dtype=np.float64)
    e_field = np.abs(sol.field(zs, clearance_factor=0.0) - U.value(zs)).max()
    return [float(e_dens), float(e_field)]


def _row_transmission(cfg: StudyConfig, curve, N: int):
    ki = cfg.contrast * cfg.k
    U = point_source(cfg.x0, cfg.k)       # exterior field, singular inside
    V = plane_wave(cfg.d, ki)             # interior field, entire
    grid = sample_grids(curve, N, cfg.eps, cfg.allow_unstable)
    u0, u1 = incident_traces(U, grid)
    v0, v1 = incident_traces(V, grid)
    beta0 = v0 - u0
    beta1 = v1 / cfg.alpha - u1
    sol = solve_transmission(grid, cfg.k, cfg.contrast, cfg.alpha, beta0, beta1)
    e_lam = np.abs(sol.lam.coeffs / grid.h - v1 / (cfg.alpha * grid.h)).max()
    e_phi = np.abs(sol.phi.coeffs - v0).max()
    zs = np.asarray(cfg.obs_interior, dtype=np.float64)
    e_v = np.abs(sol.interior(zs, clearance_factor=0.0) - V.value(zs)).max()
    return [float(e_lam), float(e_phi), float(e_v)]


def _row_burton_miller(cfg: StudyConfig, curve, N: int):
    Uinc = plane_wave(cfg.d, cfg.k)
    grid = sample_grids(curve, N, cfg.eps, cfg.allow_unstable)
    ops = assemble_all(grid, cfg.k)
    sol = solve_burton_miller(grid, cfg.k, Uinc, cfg.coupling, ops,
                              scaled_coupling=cfg.scaled_coupling)
    zs = np.asarray(cfg.obs_interior, dtype=np.float64)
    # inside a sound-soft obstacle the single-layer extension of xi
    # reproduces the incident field
    ext = eval_S(grid, cfg.k, sol.densities["xi"], zs, clearance_factor=0.0)
    e_u = np.abs(ext - Uinc.value(zs)).max()
    beta0 = sol.diagnostics["beta0"]
    sol_d = solve_exterior(grid, cfg.k, "dD01h", -beta0, ops)
    e_xi = np.abs(sol_d.pointwise("lambda") - sol.pointwise("lambda")).max()
    return [float(e_u), float(e_xi)]


def _row_calderon(cfg: StudyConfig, curve, N: int):
    U = point_source(cfg.x0, cfg.k)
    grid = sample_grids(curve, N, cfg.eps, cfg.allow_unstable)
    beta0, beta1 = incident_traces(U, grid)
    r1, r2 = calderon_residuals(grid, cfg.k, beta0, beta1)
    return [float(np.abs(r1).max()), float(np.abs(r2 / grid.h).max())]


_ROW_FUNCS = {"transmission": _row_transmission,
              "burton-miller": _row_burton_miller,
              "calderon": _row_calderon}


# ----- report -------------------------------------------------------------------


def _ecr_table(errors):
    """e.c.r. = log2(prev/curr) per column; None on the first row and
    wherever the ratio is undefined."""
    out = []
    for r, row in enumerate(errors):
        if r == 0:
            out.append([None] * len(row))
            continue
        prev = errors[r - 1]
        line = []
        for e_prev, e_curr in zip(prev, row):
            if e_prev > 0 and e_curr > 0:
                line.append(float(np.log2(e_prev / e_curr)))
            else:
                line.append(None)
        out.append(line)
    return out


@dataclass
class ConvergenceReport:
    """Rows of (N, errors) plus derived rates and optional metadata."""

    method: str
    columns: tuple
    Ns: tuple
    errors: list                 # list of per-row error lists (floats)
    meta: dict = field(default_factory=dict)

    @property
    def ecr(self):
        return _ecr_table(self.errors)

    def _check_rates(self, ecr):
        # the emitted rate column must be recomputable from the error column
        again = _ecr_table(self.errors)
        for row_a, row_b in zip(ecr, again):
            for a, b in zip(row_a, row_b):
                if (a is None) != (b is None) or (a is not None and a != b):
                    raise AssertionError("e.c.r. column inconsistent with errors")

    def to_csv(self, no_meta: bool = False) -> str:
        ecr = self.ecr
        self._check_rates(ecr)
        ncol = len(self.columns)
        lines = []
        if not no_meta:
            lines.append(f"# method: {self.method}")
            names = ", ".join(f"error_{i + 1}={c}" for i, c in enumerate(self.columns))
            lines.append(f"# columns: {names}")
            for key in sorted(self.meta):
                lines.append(f"# {key}: {self.meta[key]}")
        header = "N" + "".join(f",error_{i + 1},ecr_{i + 1}" for i in range(ncol))
        lines.append(header)
        for N, errrow, ecrrow in zip(self.Ns, self.errors, ecr):
            cells = [str(N)]
            for e, r in zip(errrow, ecrrow):
                cells.append(f"{e:.4e}")
                cells.append("" if r is None else f"{r:.4f}")
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def to_json(self, no_meta: bool = False) -> str:
        ecr = self.ecr
        self._check_rates(ecr)
        obj = {
            "method": self.method,
            "columns": {f"error_{i + 1}": c for i, c in enumerate(self.columns)},
            "rows": [{"N": int(N), "errors": list(err), "ecr": list(r)}
                     for N, err, r in zip(self.Ns, self.errors, ecr)],
        }
        if not no_meta:
            obj["meta"] = self.meta
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"

    def render(self, fmt: str = "csv", no_meta: bool = False) -> str:
        if fmt == "csv":
            return self.to_csv(no_meta)
        if fmt == "json":
            return self.to_json(no_meta)
        raise ValueError(f"unknown report format {fmt!r}")


def _specfun_summary() -> str:
    """Tiny deterministic accuracy self-check recorded in report metadata."""
    x = np.logspace(-4, np.log10(200.0), 200)
    j0, j1 = specfun.bessel_j0(x), specfun.bessel_j1(x)
    y0, y1 = specfun.bessel_y0(x), specfun.bessel_y1(x)
    wron = np.abs((j1 * y0 - j0 * y1) * (np.pi * x / 2.0) - 1.0).max()
    spots = max(abs(specfun.bessel_j0(0.0) - 1.0),
                abs(specfun.bessel_j1(0.0)),
                abs(specfun.bessel_j0(1.0) - 0.7651976865579666),
                abs(specfun.bessel_y0(1.0) - 0.08825696421567696))
    ok = wron <= 1e-9 and spots <= 1e-12
    return f"{'pass' if ok else 'FAIL'}; wronskian<={wron:.2e}; spots<={spots:.2e}"


def run_study(config: StudyConfig) -> ConvergenceReport:
    """Run the configured convergence study over its N ladder.

    Ladder rungs are computed concurrently; any failure is re-raised as a
    StudyError naming the offending N.  The report is deterministic for a
    fixed config (metadata wall time and timestamp aside).
    """
    cfg = config.validate()
    curve = parse_curve_spec(cfg.curve)
    rowfn = _ROW_FUNCS.get(cfg.method, _row_exterior)
    columns = STUDY_COLUMNS.get(cfg.method, ("E_density", "E_field"))

    t0 = time.perf_counter()
    results = {}
    with ThreadPoolExecutor(max_workers=min(4, len(cfg.ladder))) as pool:
        futures = {pool.submit(rowfn, cfg, curve, N): N for N in cfg.ladder}
        for fut, N in futures.items():
            try:
                results[N] = fut.result()
            except Exception as exc:
                raise StudyError(N, exc) from exc
    wall = time.perf_counter() - t0

    meta = {
        "config": cfg.echo(),
        "specfun": _specfun_summary(),
        "wall_time_s": f"{wall:.3f}",
        "generated": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    return ConvergenceReport(method=cfg.method, columns=columns,
                             Ns=tuple(cfg.ladder),
                             errors=[results[N] for N in cfg.ladder],
                             meta=meta)
