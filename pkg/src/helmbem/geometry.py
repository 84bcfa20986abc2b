"""Boundary curves and staggered sampling grids.

A boundary is one or more smooth, 1-periodic, positively oriented, pairwise
disjoint closed curves, each given by analytic evaluators of x(t), x'(t) and
x''(t).  Sampling places two interleaved families of points on each curve:

    t_i = i h,           s_i = (i - 1/2) h,        i = 1..N,  h = 1/N,

(t_i is the midpoint of (s_i, s_{i+1})) and repeats the construction on the
companion grid shifted by eps*h:

    t_i^eps = (i + eps) h,   s_i^eps = (i + eps - 1/2) h.

Per grid and index the sampled quantities are the point m_i = x(t_i), the
breakpoint b_i = x(s_i), the scaled outward normal n_i = h (x2'(t_i),
-x1'(t_i)) (note the built-in factor h), its length ell_i = h |x'(t_i)|, and
the scaled second derivative s2_i = h^2 x''(t_i).

The offset eps must lie in (-1/2, 1/2) and be nonzero; eps = 0 would place
the companion points on top of the main ones, and |eps| = 1/2 produces an
unstable single-layer discretization and is rejected unless explicitly
overridden.  The default eps = 1/6 is the value for which the methods built
on these grids are second-order accurate.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_EPS = 1.0 / 6.0

_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class ParametrizedCurve:
    """One closed boundary component.

    Attributes
    ----------
    x, xp, xpp : callable
        Evaluators of the parametrization and its first two derivatives.
        Each maps a float array of shape (n,) to an array of shape (n, 2)
        and must be 1-periodic.  Derivatives are analytic by contract; the
        toolkit never differentiates numerically.
    label : str
        Display name used in diagnostics.
    """

    x: Callable[[np.ndarray], np.ndarray]
    xp: Callable[[np.ndarray], np.ndarray]
    xpp: Callable[[np.ndarray], np.ndarray]
    label: str = "curve"


def _ellipse(a: float, b: float, cx: float, cy: float, label: str) -> ParametrizedCurve:
    def x(t):
        ang = _TWO_PI * np.asarray(t, dtype=np.float64)
        return np.stack([cx + a * np.cos(ang), cy + b * np.sin(ang)], axis=-1)

    def xp(t):
        ang = _TWO_PI * np.asarray(t, dtype=np.float64)
        return _TWO_PI * np.stack([-a * np.sin(ang), b * np.cos(ang)], axis=-1)

    def xpp(t):
        ang = _TWO_PI * np.asarray(t, dtype=np.float64)
        return -(_TWO_PI ** 2) * np.stack([a * np.cos(ang), b * np.sin(ang)], axis=-1)

    return ParametrizedCurve(x, xp, xpp, label)


def _fourier(coeffs) -> ParametrizedCurve:
    """Trigonometric-polynomial curve.

    coeffs has shape (M + 1, 4) with row m holding (ax_m, bx_m, ay_m, by_m):

        x1(t) = sum_m ax_m cos(2 pi m t) + bx_m sin(2 pi m t)
        x2(t) = sum_m ay_m cos(2 pi m t) + by_m sin(2 pi m t)
    """
    c = np.asarray(coeffs, dtype=np.float64)
    if c.ndim != 2 or c.shape[1] != 4:
        raise ValueError(f"fourier coefficients must have shape (M+1, 4), got {c.shape}")
    modes = np.arange(c.shape[0], dtype=np.float64)

    def _eval(t, deriv):
        ang = _TWO_PI * np.multiply.outer(np.asarray(t, dtype=np.float64), modes)
        factor = (_TWO_PI * modes) ** deriv
        if deriv == 0:
            cos_part, sin_part = np.cos(ang), np.sin(ang)
        elif deriv == 1:
            cos_part, sin_part = -np.sin(ang), np.cos(ang)
        else:
            cos_part, sin_part = -np.cos(ang), -np.sin(ang)
        x1 = cos_part @ (factor * c[:, 0]) + sin_part @ (factor * c[:, 1])
        x2 = cos_part @ (factor * c[:, 2]) + sin_part @ (factor * c[:, 3])
        return np.stack([x1, x2], axis=-1)

    return ParametrizedCurve(
        lambda t: _eval(t, 0), lambda t: _eval(t, 1), lambda t: _eval(t, 2), "fourier"
    )


def builtin_curve(name: str, *params) -> ParametrizedCurve:
    """Construct a named curve.

    Supported: circle(r) -- x(t) = r (cos 2 pi t, sin 2 pi t);
    paper_ellipse -- the 2-by-1 ellipse centered at (0.1, 0.2);
    ellipse(a, b, cx, cy); fourier(coeffs) with coeffs as in _fourier.
    """
    if name == "circle":
        (r,) = params or (1.0,)
        if r <= 0:
            raise ValueError(f"circle radius must be positive, got {r}")
        return _ellipse(r, r, 0.0, 0.0, f"circle({r:g})")
    if name == "paper_ellipse":
        if params:
            raise ValueError("paper_ellipse takes no parameters")
        return _ellipse(2.0, 1.0, 0.1, 0.2, "ellipse(2,1)+(0.1,0.2)")
    if name == "ellipse":
        a, b, cx, cy = params
        if a <= 0 or b <= 0:
            raise ValueError(f"ellipse semiaxes must be positive, got a={a}, b={b}")
        return _ellipse(a, b, cx, cy, f"ellipse({a:g},{b:g})+({cx:g},{cy:g})")
    if name == "fourier":
        (coeffs,) = params
        return _fourier(coeffs)
    raise ValueError(f"unknown curve name {name!r}")


def parse_curve_spec(spec: str) -> ParametrizedCurve:
    """Parse a textual curve spec: 'circle 1', 'ellipse 2 1 0.1 0.2',
    'paper_ellipse', or 'fourier <path>' (a whitespace-separated table of
    ax bx ay by rows, one per mode)."""
    parts = spec.split()
    if not parts:
        raise ValueError("empty curve spec")
    name, args = parts[0], parts[1:]
    if name == "fourier":
        if len(args) != 1:
            raise ValueError("fourier spec needs exactly one path argument")
        table = np.loadtxt(args[0], dtype=np.float64, ndmin=2)
        return builtin_curve("fourier", table)
    return builtin_curve(name, *(float(a) for a in args))


@dataclass(frozen=True)
class GridGeometry:
    """All sampled geometric data for the main and companion grids.

    Arrays are concatenated over components (0-based storage; the cycles
    reported by `cycles` are 1-based).  `n`, `ell` and `s2` carry the grid
    factors h and h^2 as described in the module docstring; `h` holds the
    per-index parameter step (constant within a component) and `component`
    the owning component id.  `next_idx` maps each index to the next one
    around its component, which is the permutation the hypersingular
    assembly differences against.  All arrays are read-only.
    """

    eps: float
    t: np.ndarray          # (N,) main parameters t_i
    m: np.ndarray          # (N, 2) x(t_i)
    b: np.ndarray          # (N, 2) x(s_i)
    n: np.ndarray          # (N, 2) h * normal at t_i
    ell: np.ndarray        # (N,) |n_i|
    s2: np.ndarray         # (N, 2) h^2 x''(t_i)
    te: np.ndarray         # companion counterparts
    me: np.ndarray
    be: np.ndarray
    ne: np.ndarray
    elle: np.ndarray
    s2e: np.ndarray
    h: np.ndarray          # (N,) parameter step per index
    component: np.ndarray  # (N,) component id per index
    next_idx: np.ndarray   # (N,) next index within the component (0-based)
    curves: tuple = field(repr=False, default=())

    @property
    def size(self) -> int:
        return self.m.shape[0]

    @property
    def cycles(self):
        """Next-index permutation as 1-based cycles, one per component."""
        out = []
        for comp in np.unique(self.component):
            idx = np.nonzero(self.component == comp)[0]
            cycle = [int(idx[0]) + 1]
            j = self.next_idx[idx[0]]
            while j != idx[0]:
                cycle.append(int(j) + 1)
                j = self.next_idx[j]
            out.append(tuple(cycle))
        return out

    def clearance(self, factor: float = 10.0) -> float:
        """Default off-curve clearance: factor * h * max |x'| over all grids."""
        return factor * max(self.ell.max(), self.elle.max())


def _check_eps(eps: float, allow_unstable: bool):
    if not np.isfinite(eps):
        raise ValueError("eps must be finite")
    if eps == 0.0:
        raise ValueError("eps = 0 places the companion grid on top of the main grid; "
                         "choose eps in (-1/2, 1/2) \\ {0} (default 1/6)")
    if abs(eps) == 0.5:
        if not allow_unstable:
            raise ValueError("|eps| = 1/2 yields an unstable single-layer discretization; "
                             "pass allow_unstable=True to force it")
        logger.warning("proceeding with |eps| = 1/2 (unstable discretization)")
        return
    if abs(eps) > 0.5:
        raise ValueError(f"eps must lie in (-1/2, 1/2), got {eps}")


def sample_grids(curves, N, eps: float = DEFAULT_EPS, allow_unstable: bool = False) -> GridGeometry:
    """Sample one or more curves on the staggered main/companion grids.

    Parameters
    ----------
    curves : ParametrizedCurve or sequence of them
    N : int or sequence of int
        Points per component (>= 4 each).
    eps : float
        Companion-grid offset, in (-1/2, 1/2), nonzero.  1/6 by default.
    allow_unstable : bool
        Admit |eps| = 1/2 (rejected otherwise, see module docstring).
    """
    if isinstance(curves, ParametrizedCurve):
        curves = [curves]
    curves = list(curves)
    if not curves:
        raise ValueError("at least one curve is required")
    if isinstance(N, (int, np.integer)):
        Ns = [int(N)] * len(curves)
    else:
        Ns = [int(v) for v in N]
        if len(Ns) != len(curves):
            raise ValueError(f"got {len(Ns)} grid sizes for {len(curves)} curves")
    for Nc in Ns:
        if Nc < 4:
            raise ValueError(f"need N >= 4 per component, got {Nc}")
    _check_eps(eps, allow_unstable)

    parts = {key: [] for key in ("t", "m", "b", "n", "ell", "s2",
                                 "te", "me", "be", "ne", "elle", "s2e",
                                 "h", "component")}
    next_idx = []
    offset = 0
    for comp, (curve, Nc) in enumerate(zip(curves, Ns)):
        h = 1.0 / Nc
        i = np.arange(1, Nc + 1, dtype=np.float64)
        for tag, shift in (("", 0.0), ("e", eps)):
            t = (i + shift) * h
            s = (i + shift - 0.5) * h
            x = curve.x(t)
            xp = curve.xp(t)
            xpp = curve.xpp(t)
            nrm = h * np.stack([xp[:, 1], -xp[:, 0]], axis=-1)
            parts["t" + tag].append(t)
            parts["m" + tag].append(x)
            parts["b" + tag].append(curve.x(s))
            parts["n" + tag].append(nrm)
            parts["ell" + tag].append(np.hypot(nrm[:, 0], nrm[:, 1]))
            parts["s2" + tag].append(h * h * xpp)
        parts["h"].append(np.full(Nc, h))
        parts["component"].append(np.full(Nc, comp, dtype=np.intp))
        next_idx.append(offset + (np.arange(Nc) + 1) % Nc)
        offset += Nc

        _validate_component(curve, comp, parts)

    arrays = {key: np.concatenate(vals) for key, vals in parts.items()}
    arrays["next_idx"] = np.concatenate(next_idx)
    for arr in arrays.values():
        arr.setflags(write=False)
    return GridGeometry(eps=eps, curves=tuple(curves), **arrays)


def _validate_component(curve: ParametrizedCurve, comp: int, parts) -> None:
    label = f"component {comp} ({curve.label})"
    for key in ("ell", "elle"):
        ell = parts[key][-1]
        if not np.all(ell > 0.0) or not np.all(np.isfinite(ell)):
            raise ValueError(f"{label}: |x'(t)| must be positive at all sampled t "
                             "(irregular parametrization)")
    t = parts["t"][-1]
    x0 = parts["m"][-1]
    x1 = curve.x(t + 1.0)
    scale = 1.0 + np.abs(x0).max()
    if np.abs(x1 - x0).max() > 1e-10 * scale:
        raise ValueError(f"{label}: x(t+1) != x(t); the parametrization must be 1-periodic")
    m = x0
    area = 0.5 * np.sum(m[:, 0] * np.roll(m[:, 1], -1) - np.roll(m[:, 0], -1) * m[:, 1])
    if area <= 0.0:
        raise ValueError(f"{label}: discrete signed area {area:.3e} is not positive; "
                         "the parametrization must be positively oriented "
                         "(counterclockwise)")
