#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-NumPy fallback.

Times the two hot paths shared by all matrix assembly -- the single-layer
kernel (Hankel H0 on a distance matrix) and the dipole kernel (H1 with a
direction/normal contraction) -- plus the vectorized Bessel evaluators
themselves.  Run:

    python benchmarks/bench_kernels.py [--sizes 160,320,640,1280] [--repeats 5]
"""

import argparse
import math
import time

import numpy as np

from helmbem.backends import load_compiled, pure


def _points(N, radius=1.0, offset=0.0):
    t = (np.arange(1, N + 1) + offset) / N
    a = 2.0 * math.pi * t
    return radius * np.cos(a), radius * np.sin(a)


def _normals(N):
    ax, ay = _points(N)
    h = 1.0 / N
    return h * 2.0 * math.pi * ax, h * 2.0 * math.pi * ay


def _best(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases(N, k=3.0):
    mx, my = _points(N)
    bx, by = _points(N, radius=1.0, offset=1.0 / 6.0)
    nx, ny = _normals(N)
    x = np.logspace(-4, math.log10(200.0), N * N // 4 + 1)
    return {
        f"kernel_single {N}x{N}": lambda mod: mod.kernel_single(mx, my, bx, by, k),
        f"kernel_dipole {N}x{N}": lambda mod: mod.kernel_dipole(
            mx, my, bx, by, nx, ny, k, "col", "row-col"
        ),
        f"j0+y0 on {len(x)} pts": lambda mod: (mod.j0(x), mod.y0(x)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="160,320,640,1280",
                    help="comma-separated matrix sizes (default 160,320,640,1280)")
    ap.add_argument("--repeats", type=int, default=5,
                    help="timing repeats; the best run is reported (default 5)")
    args = ap.parse_args()

    compiled = load_compiled()
    if compiled is None:
        print("compiled backend not importable; build it with "
              "'pip install -e . --no-build-isolation' first")
        return 1

    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    width = 26
    print(f"{'case':<{width}} {'pure [ms]':>10} {'compiled [ms]':>14} {'speedup':>8}")
    for N in sizes:
        for label, call in _cases(N).items():
            call(pure), call(compiled)  # warm up and touch both paths once
            tp = _best(lambda: call(pure), args.repeats)
            tc = _best(lambda: call(compiled), args.repeats)
            print(f"{label:<{width}} {tp * 1e3:>10.2f} {tc * 1e3:>14.2f} "
                  f"{tp / tc:>7.2f}x")
    # Agreement spot check so a speedup never hides a numerical drift.
    mx, my = _points(257)
    bx, by = _points(257, offset=1.0 / 6.0)
    a = pure.kernel_single(mx, my, bx, by, 3.0)
    b = compiled.kernel_single(mx, my, bx, by, 3.0)
    print(f"max |pure - compiled| on a 257x257 single-layer block: "
          f"{np.abs(a - b).max():.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
