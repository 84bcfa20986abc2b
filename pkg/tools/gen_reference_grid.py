#!/usr/bin/env python3
"""Regenerate tests/data/specfun_reference.csv.

Tabulates the extended-precision series oracle (tests/bessel_ref.py) on the
canonical accuracy grid: 10,000 log-spaced points in [1e-4, 200].  Values are
written with 17 significant digits, which pins them to the nearest double.

Run from the repository root:  python3 tools/gen_reference_grid.py
(takes about a minute; the test suite reads the frozen file instead of
re-evaluating the oracle).
"""

import pathlib
import sys

import mpmath as mp
import numpy as np

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import bessel_ref  # noqa: E402

OUT = ROOT / "tests" / "data" / "specfun_reference.csv"


def main():
    xs = np.logspace(np.log10(1e-4), np.log10(200.0), 10000)
    with OUT.open("w") as fh:
        fh.write("# x, J0, J1, Y0, Y1 -- series oracle, rounded to 17 significant digits\n")
        for x in xs:
            x = float(x)
            vals = bessel_ref.ref_all(x)
            with mp.workdps(25):
                row = ",".join(mp.nstr(v, 17, strip_zeros=False) for v in vals)
            fh.write(f"{x!r},{row}\n")
    print(f"wrote {OUT} ({OUT.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
