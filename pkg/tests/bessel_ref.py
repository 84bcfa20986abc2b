"""Extended-precision Bessel/Hankel reference values for the test suite.

Everything here is computed from the ascending power series in mpmath
working precision, with the precision raised adaptively to absorb the
alternating-series cancellation (roughly x*log10(e) digits at argument x).
This is deliberately a different algorithm and a different arithmetic from
the production evaluators, so agreement between the two is meaningful.

Only intended for test use; a single evaluation at x = 200 costs a few
milliseconds.
"""

import mpmath as mp

__all__ = [
    "ref_j0",
    "ref_j1",
    "ref_y0",
    "ref_y1",
    "ref_h0",
    "ref_h1",
    "ref_all",
]


def _dps_for(x: float) -> int:
    # The partial sums reach ~ e^x / sqrt(2 pi x) before collapsing to
    # O(x^{-1/2}); budget 0.4343*x digits of cancellation plus headroom.
    return 40 + int(0.45 * abs(x))


def _harmonic(n: int) -> mp.mpf:
    h = mp.mpf(0)
    for i in range(1, n + 1):
        h += mp.mpf(1) / i
    return h


def _series_j0(x):
    q = -(x * x) / 4
    term = mp.mpf(1)
    acc = mp.mpf(1)
    k = 0
    tiny = mp.mpf(10) ** (-(mp.mp.dps + 10))
    while True:
        k += 1
        term = term * q / (k * k)
        acc += term
        if abs(term) < tiny * (1 + abs(acc)):
            return acc


def _series_j1(x):
    # J1(x) = (x/2) * sum_k (-x^2/4)^k / (k! (k+1)!)
    q = -(x * x) / 4
    term = mp.mpf(1)
    acc = mp.mpf(1)
    k = 0
    tiny = mp.mpf(10) ** (-(mp.mp.dps + 10))
    while True:
        k += 1
        term = term * q / (k * (k + 1))
        acc += term
        if abs(term) < tiny * (1 + abs(acc)):
            return acc * x / 2


def _series_y0(x):
    # Y0 = (2/pi) [ (ln(x/2)+gamma) J0 + sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2 ]
    w = (x * x) / 4
    term = mp.mpf(1)  # (x^2/4)^k / (k!)^2 at k=0
    acc = mp.mpf(0)
    hk = mp.mpf(0)
    k = 0
    tiny = mp.mpf(10) ** (-(mp.mp.dps + 10))
    while True:
        k += 1
        term = term * w / (k * k)
        hk += mp.mpf(1) / k
        contrib = (-1) ** (k + 1) * hk * term
        acc += contrib
        if hk * term < tiny * (1 + abs(acc)):
            break
    j0 = _series_j0(x)
    return (2 / mp.pi) * ((mp.log(x / 2) + mp.euler) * j0 + acc)


def _series_y1(x):
    # Y1 = (2/pi) [ (ln(x/2)+gamma) J1 - 1/x ]
    #      - (x/(2 pi)) sum_{k>=0} (-1)^k (H_k + H_{k+1}) (x^2/4)^k / (k! (k+1)!)
    w = (x * x) / 4
    term = mp.mpf(1)  # (x^2/4)^k / (k!(k+1)!) at k=0
    hk = mp.mpf(0)
    hk1 = mp.mpf(1)
    acc = hk + hk1
    k = 0
    tiny = mp.mpf(10) ** (-(mp.mp.dps + 10))
    while True:
        k += 1
        term = term * w / (k * (k + 1))
        hk += mp.mpf(1) / k
        hk1 += mp.mpf(1) / (k + 1)
        acc += (-1) ** k * (hk + hk1) * term
        if (hk + hk1) * term < tiny * (1 + abs(acc)):
            break
    j1 = _series_j1(x)
    return (2 / mp.pi) * ((mp.log(x / 2) + mp.euler) * j1 - 1 / x) - x / (2 * mp.pi) * acc


def _eval(fn, x):
    with mp.workdps(_dps_for(x)):
        return fn(mp.mpf(x))


def ref_j0(x):
    """J0(x) as an mpf, accurate to the full returned precision."""
    return _eval(_series_j0, x)


def ref_j1(x):
    return _eval(_series_j1, x)


def ref_y0(x):
    if x <= 0:
        raise ValueError("Y0 requires x > 0")
    return _eval(_series_y0, x)


def ref_y1(x):
    if x <= 0:
        raise ValueError("Y1 requires x > 0")
    return _eval(_series_y1, x)


def ref_all(x):
    """(J0, J1, Y0, Y1) at x, sharing one precision context."""
    with mp.workdps(_dps_for(x)):
        xm = mp.mpf(x)
        return (_series_j0(xm), _series_j1(xm), _series_y0(xm), _series_y1(xm))


def ref_h0(x):
    """First-kind Hankel H0 = J0 + i Y0 as an mpc."""
    j0, _, y0, _ = ref_all(x)
    return mp.mpc(j0, y0)


def ref_h1(x):
    j1 = ref_j1(x)
    y1 = ref_y1(x)
    return mp.mpc(j1, y1)
