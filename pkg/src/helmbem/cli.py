"""Command-line front end.

Subcommands
-----------
solve        one solve at a single N; emits densities and diagnostics
convergence  N-ladder study; emits the error/e.c.r. table (CSV or JSON)
field        one solve, then field evaluation on a rectangular lattice (CSV)
selftest     special-function accuracy suite plus the N=4 circle fixtures

Common flags: --curve, --k, --eps, --N, --method, --coupling, --c (contrast),
--alpha, --out {csv|json}, --config <file>, --output <path>, --no-meta.
A config file holds one `key = value` per line (# comments allowed) with the
same keys as the long flags; explicit flags override config values.

Exit codes: 0 ok, 2 usage/configuration error, 3 numerical error
(singular system, resonance, assembly or clearance failure), 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__, specfun
from .geometry import parse_curve_spec, sample_grids
from .linsolve import SingularMatrixError
from .operators import AssemblyError, assemble_all
from .potentials import (ClearanceError, incident_traces, plane_wave, point_source,
                         write_field_csv)
from .solvers import METHOD_INFO, solve_burton_miller, solve_exterior, solve_transmission
from .study import StudyConfig, StudyError, run_study


# ----- value parsing ------------------------------------------------------------

def _real(s):
    """Float literal, also accepting simple fractions like 2/3."""
    s = str(s).strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return float(num) / float(den)
    return float(s)


def _cplx(s):
    """Complex literal; accepts i or j for the imaginary unit (e.g. -2i)."""
    t = str(s).strip().replace("I", "j").replace("i", "j")
    try:
        return _real(s)
    except ValueError:
        pass
    try:
        return complex(t)
    except ValueError:
        raise ValueError(f"cannot parse complex number {s!r}") from None


def _ints(s):
    vals = [int(tok) for tok in str(s).replace(",", " ").split()]
    if not vals:
        raise ValueError(f"expected at least one integer, got {s!r}")
    return tuple(vals)


def _pair(s):
    vals = [float(tok) for tok in str(s).replace(",", " ").split()]
    if len(vals) != 2:
        raise ValueError(f"expected two numbers, got {s!r}")
    return tuple(vals)


def _points(s):
    pts = [_pair(chunk) for chunk in str(s).split(";") if chunk.strip()]
    if not pts:
        raise ValueError(f"expected points 'x1,y1;x2,y2;...', got {s!r}")
    return tuple(pts)


def _lattice(s):
    vals = [float(tok) for tok in str(s).replace(",", " ").split()]
    if len(vals) != 6:
        raise ValueError(f"lattice needs xmin,xmax,ymin,ymax,nx,ny; got {s!r}")
    return (vals[0], vals[1], vals[2], vals[3], int(vals[4]), int(vals[5]))


def _bool(s):
    t = str(s).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"cannot parse boolean {s!r}")


def parse_config_file(path):
    """Flat key = value lines; # starts a comment; blank lines ignored."""
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            key, val = line.split("=", 1)
            key = key.strip().replace("-", "_")
            if not key:
                raise ValueError(f"{path}:{lineno}: empty key")
            out[key] = val.strip()
    return out


_CONFIG_PARSERS = {
    "curve": str, "method": str, "k": _real, "eps": _real, "N": _ints,
    "c": _real, "contrast": _real, "alpha": _cplx, "coupling": _cplx,
    "x0": _pair, "d": _pair, "obs": _points, "obs_interior": _points,
    "out": str, "output": str, "lattice": _lattice, "region": str,
    "no_meta": _bool, "scaled_coupling": _bool, "allow_unstable": _bool,
    "clearance_factor": _real,
}


# ----- argument plumbing ----------------------------------------------------------

def _add_common(p):
    p.add_argument("--config", metavar="FILE", help="config file of key = value lines")
    p.add_argument("--curve", help="curve spec, e.g. 'paper_ellipse' or 'ellipse 2 1 0.1 0.2'")
    p.add_argument("--method", help="dD01..iN02, transmission, burton-miller, or calderon")
    p.add_argument("--k", type=_real, help="exterior wavenumber (default 3)")
    p.add_argument("--eps", type=_real, help="companion-grid offset (default 1/6)")
    p.add_argument("--N", type=_ints, help="grid size, or comma list for ladders")
    p.add_argument("--c", dest="contrast", type=_real,
                   help="transmission contrast: interior wavenumber is c*k")
    p.add_argument("--alpha", type=_cplx, help="transmission flux weight (default 3/2)")
    p.add_argument("--coupling", type=_cplx,
                   help="combined-field coupling constant (default -i*k)")
    p.add_argument("--x0", type=_pair, help="manufactured point-source location")
    p.add_argument("--d", type=_pair, help="plane-wave direction")
    p.add_argument("--obs", type=_points, help="exterior observation points x,y;x,y")
    p.add_argument("--obs-interior", dest="obs_interior", type=_points,
                   help="interior observation points x,y;x,y")
    p.add_argument("--out", choices=("csv", "json"), help="output format (default csv)")
    p.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")
    p.add_argument("--no-meta", action="store_true", default=None,
                   help="suppress metadata (deterministic bytes)")
    p.add_argument("--scaled-coupling", action="store_true", default=None,
                   help="weight the trace row by c*h instead of c")
    p.add_argument("--allow-unstable", action="store_true", default=None,
                   help="admit |eps| = 1/2 grids")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="helmbem",
        description="Staggered-grid Nystrom toolkit for 2D Helmholtz boundary integral equations")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve once at a single N")
    _add_common(p)

    p = sub.add_parser("convergence", help="run an N-ladder convergence study")
    _add_common(p)

    p = sub.add_parser("field", help="solve once and export the field on a lattice")
    _add_common(p)
    p.add_argument("--lattice", type=_lattice,
                   help="xmin,xmax,ymin,ymax,nx,ny (required)")
    p.add_argument("--region", choices=("exterior", "interior"),
                   help="which transmission field to evaluate (default exterior)")
    p.add_argument("--clearance-factor", dest="clearance_factor", type=_real,
                   help="clearance multiple of h*max|x'| (default 10)")

    sub.add_parser("selftest", help="run embedded accuracy and fixture checks")
    return ap


def _merge(args):
    """Config-file values fill in flags the command line left unset."""
    merged = dict(vars(args))
    if args.config:
        raw = parse_config_file(args.config)
        for key, text in raw.items():
            parse = _CONFIG_PARSERS.get(key)
            if parse is None:
                raise ValueError(f"unknown config key {key!r} in {args.config}")
            dest = "contrast" if key == "c" else key
            if merged.get(dest) is None:
                merged[dest] = parse(text)
    return merged


def _study_config(merged, single_N=False) -> StudyConfig:
    cfg = StudyConfig()
    if merged.get("curve") is not None:
        cfg.curve = merged["curve"]
    if merged.get("method") is not None:
        cfg.method = merged["method"]
    if merged.get("k") is not None:
        cfg.k = merged["k"]
    if merged.get("eps") is not None:
        cfg.eps = merged["eps"]
    if merged.get("N") is not None:
        cfg.ladder = tuple(merged["N"])
    elif single_N:
        cfg.ladder = (160,)
    if single_N and len(cfg.ladder) != 1:
        cfg.ladder = (cfg.ladder[-1],)
    if merged.get("contrast") is not None:
        cfg.contrast = merged["contrast"]
    if merged.get("alpha") is not None:
        cfg.alpha = merged["alpha"]
    if merged.get("coupling") is not None:
        cfg.coupling = merged["coupling"]
    if merged.get("x0") is not None:
        cfg.x0 = merged["x0"]
    if merged.get("d") is not None:
        cfg.d = merged["d"]
    if merged.get("obs") is not None:
        cfg.obs_exterior = merged["obs"]
    if merged.get("obs_interior") is not None:
        cfg.obs_interior = merged["obs_interior"]
    if merged.get("out") is not None:
        cfg.out = merged["out"]
    if merged.get("scaled_coupling"):
        cfg.scaled_coupling = True
    if merged.get("allow_unstable"):
        cfg.allow_unstable = True
    return cfg.validate()


def _emit(text, merged):
    path = merged.get("output")
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----- subcommand: solve -----------------------------------------------------------

def _solve_once(cfg: StudyConfig):
    """One solve with the configured manufactured data; returns
    (solution-like, named densities dict, diagnostics dict, grid)."""
    curve = parse_curve_spec(cfg.curve)
    N = cfg.ladder[-1]
    grid = sample_grids(curve, N, cfg.eps, cfg.allow_unstable)
    if cfg.method == "transmission":
        ki = cfg.contrast * cfg.k
        U = point_source(cfg.x0, cfg.k)
        V = plane_wave(cfg.d, ki)
        u0, u1 = incident_traces(U, grid)
        v0, v1 = incident_traces(V, grid)
        sol = solve_transmission(grid, cfg.k, cfg.contrast, cfg.alpha,
                                 v0 - u0, v1 / cfg.alpha - u1)
        dens = {"phi": sol.phi, "lambda": sol.lam}
        return sol, dens, sol.diagnostics, grid
    if cfg.method == "burton-miller":
        Uinc = plane_wave(cfg.d, cfg.k)
        sol = solve_burton_miller(grid, cfg.k, Uinc, cfg.coupling,
                                  scaled_coupling=cfg.scaled_coupling)
        diag = {k: v for k, v in sol.diagnostics.items() if k not in ("beta0", "beta1")}
        return sol, dict(sol.densities), diag, grid
    if cfg.method == "calderon":
        raise ValueError("'calderon' is a convergence-study method; use the convergence subcommand")
    U = point_source(cfg.x0, cfg.k)
    beta0, beta1 = incident_traces(U, grid)
    data = beta0 if METHOD_INFO[cfg.method][0] == "beta0" else beta1
    sol = solve_exterior(grid, cfg.k, cfg.method, data)
    return sol, dict(sol.densities), sol.diagnostics, grid


def _cmd_solve(merged):
    cfg = _study_config(merged, single_N=True)
    sol, dens, diag, grid = _solve_once(cfg)
    no_meta = bool(merged.get("no_meta"))
    names = sorted(dens)
    fmt = cfg.out
    if fmt == "json":
        import json
        obj = {
            "method": cfg.method, "N": grid.size, "k": cfg.k, "eps": cfg.eps,
            "densities": {name: [[float(v.real), float(v.imag)] for v in dens[name].coeffs]
                          for name in names},
        }
        if not no_meta:
            obj["meta"] = {"config": cfg.echo(),
                           "cond": float(diag.get("cond", float("nan"))),
                           "warnings": list(diag.get("warnings", ()))}
        text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        if not no_meta:
            lines.append(f"# method: {cfg.method}")
            lines.append(f"# N: {grid.size}")
            lines.append(f"# config: {cfg.echo()}")
            lines.append(f"# cond: {float(diag.get('cond', float('nan'))):.6e}")
            for w in diag.get("warnings", ()):
                lines.append(f"# warning: {w}")
        header = "j" + "".join(f",{name}_re,{name}_im" for name in names)
        lines.append(header)
        for j in range(grid.size):
            cells = [str(j + 1)]
            for name in names:
                v = dens[name].coeffs[j]
                cells.append(repr(float(v.real)))
                cells.append(repr(float(v.imag)))
            lines.append(",".join(cells))
        text = "\n".join(lines) + "\n"
    _emit(text, merged)
    return 0


# ----- subcommand: convergence ------------------------------------------------------

def _cmd_convergence(merged):
    cfg = _study_config(merged)
    report = run_study(cfg)
    text = report.render(cfg.out, no_meta=bool(merged.get("no_meta")))
    _emit(text, merged)
    return 0


# ----- subcommand: field -------------------------------------------------------------

def _cmd_field(merged):
    if merged.get("lattice") is None:
        raise ValueError("field requires --lattice xmin,xmax,ymin,ymax,nx,ny")
    cfg = _study_config(merged, single_N=True)
    sol, _, _, grid = _solve_once(cfg)
    region = merged.get("region") or "exterior"
    factor = merged.get("clearance_factor")
    factor = 10.0 if factor is None else float(factor)
    if cfg.method == "transmission":
        evaluator = (lambda z: sol.interior(z, clearance_factor=0.0)) if region == "interior" \
            else (lambda z: sol.exterior(z, clearance_factor=0.0))
    else:
        if region == "interior":
            raise ValueError(f"--region interior only applies to transmission, not {cfg.method}")
        evaluator = lambda z: sol.field(z, clearance_factor=0.0)
    path = merged.get("output")
    if path:
        with open(path, "w") as fh:
            write_field_csv(grid, evaluator, merged["lattice"], fh, clearance_factor=factor)
    else:
        write_field_csv(grid, evaluator, merged["lattice"], sys.stdout, clearance_factor=factor)
    return 0


# ----- subcommand: selftest -----------------------------------------------------------

# log-spaced probes across [1e-4, 200]: x, J0, J1, Y0, Y1 to double precision
_SELFTEST_TABLE = (
    (0.0001, 0.9999999975, 4.99999999375e-05, -5.937289069709337, -6366.198036455761),
    (0.0001879134326227498, 0.9999999911721354, 9.395671589665632e-05, -5.5357021452705375, -3387.835913798105),
    (0.0003531145816006473, 0.9999999688275233, 0.0001765572880484596, -5.134115133485706, -1802.8712080169905),
    (0.0006635497313772378, 0.9999998899254415, 0.0003317748474286328, -4.732527835982045, -959.4169874559276),
    (0.0012468990773900031, 0.9999996113107105, 0.0006234494175309186, -4.330939609765646, -510.5652880329334),
    (0.002343090857664952, 0.9999986274817791, 0.0011715446248486603, -3.929348387335416, -271.7058240716635),
    (0.004402982460108044, 0.9999951534422363, 0.0022014858952246613, -3.5277475848903177, -144.5967724274333),
    (0.008273795478566623, 0.9999828861503162, 0.004136862340109793, -3.1261164854665906, -76.95835247163957),
    (0.015547573091960408, 0.9999395691557307, 0.007773551656555235, -2.724390874367792, -40.9702229281158),
    (0.029215978286633797, 0.9997866180370989, 0.014606430574902502, -2.3223755813079863, -21.828702877725597),
    (0.05490074767273081, 0.9992466189135966, 0.027440032890788845, -1.9194930885199155, -11.657283977037851),
    (0.103165879487383, 0.9973409697679303, 0.05151434423566412, -1.5140998250179243, -6.265494476261074),
    (0.1938625454401907, 0.9906263750038159, 0.09647661803752326, -1.1018040044175115, -3.4222491399356225),
    (0.36429376370650046, 0.9670966874919585, 0.17914195598735866, -0.6722192480726211, -1.9315211906139511),
    (0.6845569162114947, 0.8862324135908209, 0.3226164065424869, -0.2078696678616629, -1.1250272753527348),
    (1.2863743995094596, 0.6271784234709582, 0.5190103207066851, 0.2789955433007423, -0.5582032841497544),
    (2.417270290498513, -0.00644382639172156, 0.5164347297083244, 0.508609640457508, 0.10853916133236952),
    (4.542375578645676, -0.31051306242029897, -0.24221451781526618, -0.20722222037129007, 0.2897110146851582),
    (8.535733872450576, 0.032175340431324494, 0.27329989590325693, 0.2709658005025598, -0.0164092545530561),
    (16.03979051926466, -0.17835228662516625, 0.0831526306628682, 0.08866415485923478, 0.181199653955337),
    (30.140920950248578, -0.06887303067418996, -0.12912481031963688, -0.12796502957248693, 0.06676029399453057),
    (56.63883918172169, 0.08126110198824252, -0.06737485876655486, -0.06808951306054754, -0.0818653050378093),
    (106.43198690405231, 0.030264145463370366, -0.07103083901938376, -0.0711722266038031, -0.030598827435265534),
    (200.00000000000003, -0.015437439930563549, -0.05430453818237865, -0.05426577524981835, 0.015301824580388444),
)


def _selftest_checks():
    """Yield (name, ok, detail) tuples for every embedded check."""
    tab = np.array(_SELFTEST_TABLE)
    x = tab[:, 0]
    vals = np.stack([specfun.bessel_j0(x), specfun.bessel_j1(x),
                     specfun.bessel_y0(x), specfun.bessel_y1(x)], axis=1)
    rel = np.abs(vals - tab[:, 1:]) / np.abs(tab[:, 1:])
    yield ("special functions vs frozen references", rel.max() <= 1e-10,
           f"max rel err {rel.max():.2e} over {len(x)} probes (tol 1e-10)")

    xs = np.logspace(-4, np.log10(200.0), 10000)
    w = (specfun.bessel_j1(xs) * specfun.bessel_y0(xs)
         - specfun.bessel_j0(xs) * specfun.bessel_y1(xs)) * (np.pi * xs / 2.0)
    wmax = np.abs(w - 1.0).max()
    yield ("Wronskian identity on 10000 points", wmax <= 1e-9,
           f"max residual {wmax:.2e} (tol 1e-9)")

    gaps = []
    for fn in (specfun.bessel_j0, specfun.bessel_j1, specfun.bessel_y0, specfun.bessel_y1):
        lo, hi = fn(5.0 - 1e-12), fn(5.0 + 1e-12)
        gaps.append(abs(hi - lo) / max(abs(lo), abs(hi)))
    gmax = max(gaps)
    yield ("branch continuity at the series/asymptotic switch", gmax <= 1e-10,
           f"max rel gap {gmax:.2e} (tol 1e-10)")

    grid = sample_grids(parse_curve_spec("circle 1"), 4)
    ops = assemble_all(grid, 1.0)
    d_ell = np.abs(grid.ell - np.pi / 2).max()
    yield ("circle N=4: ell_i = pi/2", d_ell <= 1e-14, f"max dev {d_ell:.2e} (tol 1e-14)")

    d_diag = max(np.abs(np.diag(ops.Kh) + 0.125).max(),
                 np.abs(np.diag(ops.Jh) + 0.125).max())
    yield ("circle N=4: K and J diagonals = -h/2", d_diag <= 1e-13,
           f"max dev {d_diag:.2e} (tol 1e-13)")

    from .backends import active as backend
    vt = backend.kernel_single(grid.be[:, 0], grid.be[:, 1],
                               grid.b[:, 0], grid.b[:, 1], 1.0)
    wfd = ops.Wh + (grid.ne @ grid.n.T) * ops.Vh.T  # k = 1
    rowsum = np.abs(wfd.sum(axis=1)).max()
    bound = 1e-12 * np.abs(vt).max()
    yield ("circle N=4: W finite-difference row sums vanish", rowsum <= bound,
           f"max |row sum| {rowsum:.2e} (tol {bound:.2e})")

    worst = 0.0
    for M in (ops.Vh, ops.Kh, ops.Jh, ops.Wh):
        for i in range(4):
            for j in range(4):
                worst = max(worst, abs(M[i, j] - M[0, (j - i) % 4]))
    yield ("circle N=4: all four matrices circulant", worst <= 1e-12,
           f"max dev {worst:.2e} (tol 1e-12)")


def _cmd_selftest(_merged):
    failures = 0
    for name, ok, detail in _selftest_checks():
        print(f"{'PASS' if ok else 'FAIL'}: {name} -- {detail}")
        if not ok:
            failures += 1
    print(f"selftest: {'OK' if failures == 0 else f'{failures} FAILURE(S)'}")
    return 0 if failures == 0 else 3


# ----- entry point ---------------------------------------------------------------

def cli_main(argv=None) -> int:
    """Run the CLI; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 0
        return 0 if code == 0 else 2
    try:
        if args.command == "selftest":
            return _cmd_selftest({})
        merged = _merge(args)
        if args.command == "solve":
            return _cmd_solve(merged)
        if args.command == "convergence":
            return _cmd_convergence(merged)
        if args.command == "field":
            return _cmd_field(merged)
        raise ValueError(f"unknown command {args.command!r}")
    except StudyError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except (SingularMatrixError, AssemblyError, ClearanceError, np.linalg.LinAlgError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
