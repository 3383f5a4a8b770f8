"""Thin rigor layer over mpmath interval arithmetic.

Real intervals are mpmath ``iv.mpf`` values; complex boxes are (re, im)
pairs of them.  Endpoints convert exactly to Fractions, which is how all
certified comparisons against rational bounds are done.  A cheap float layer
(midpoint + guaranteed error margin) serves the hot paths.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction

from mpmath import iv, mp
from mpmath.libmp import to_rational

FLOAT_EPS_MARGIN = 2.0**-45  # generous per-term relative slack for float dots


@contextmanager
def iv_prec(prec: int):
    old = iv.prec
    iv.prec = prec + 16
    try:
        yield
    finally:
        iv.prec = old


def iv_from_fraction(f: Fraction):
    return iv.mpf(f.numerator) / iv.mpf(f.denominator)


def iv_from_int(n: int):
    return iv.mpf(n)


def _raw_endpoints(x):
    return x._mpi_


def iv_bounds(x) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an interval."""
    lo, hi = x._mpi_
    return Fraction(*to_rational(lo)), Fraction(*to_rational(hi))


def iv_lower(x) -> Fraction:
    return Fraction(*to_rational(x._mpi_[0]))


def iv_upper(x) -> Fraction:
    return Fraction(*to_rational(x._mpi_[1]))


def iv_from_endpoints(lo, hi):
    return iv.mpf([mp.make_mpf(lo), mp.make_mpf(hi)])


def iv_max(a, b):
    la, ha = a._mpi_
    lb, hb = b._mpi_
    lo = la if mp.make_mpf(la) >= mp.make_mpf(lb) else lb
    hi = ha if mp.make_mpf(ha) >= mp.make_mpf(hb) else hb
    return iv_from_endpoints(lo, hi)


def iv_intersect(a, b):
    """Intersection, assuming it is nonempty; returns a if disjoint-by-rounding."""
    la, ha = (mp.make_mpf(t) for t in a._mpi_)
    lb, hb = (mp.make_mpf(t) for t in b._mpi_)
    lo = la if la >= lb else lb
    hi = ha if ha <= hb else hb
    if lo > hi:
        return a
    return iv.mpf([lo, hi])


def iv_abs(x):
    return abs(x)


def iv_contains_zero(x) -> bool:
    lo, hi = iv_bounds(x)
    return lo <= 0 <= hi


def iv_mid_float(x) -> float:
    lo, hi = x._mpi_
    return (float(mp.make_mpf(lo)) + float(mp.make_mpf(hi))) / 2.0


def iv_float_bounds(x) -> tuple[float, float]:
    """Outward float64 bounds of an interval."""
    lo, hi = x._mpi_
    flo = float(mp.make_mpf(lo))
    fhi = float(mp.make_mpf(hi))
    return math.nextafter(flo, -math.inf), math.nextafter(fhi, math.inf)


def frac_to_float_bounds(f: Fraction) -> tuple[float, float]:
    v = f.numerator / f.denominator
    return math.nextafter(v, -math.inf), math.nextafter(v, math.inf)


# -- complex boxes ---------------------------------------------------------


def cbox(re, im):
    return (re, im)


def cbox_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def cbox_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def cbox_scale(a, s):
    return (a[0] * s, a[1] * s)


def cbox_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def cbox_abs(a):
    return iv.sqrt(a[0] * a[0] + a[1] * a[1])


def cbox_div(a, b):
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def cbox_eval_poly(coeffs, z):
    """Evaluate an integer/Fraction polynomial (constant first) on a box."""
    acc = (iv.mpf(0), iv.mpf(0))
    for c in reversed(coeffs):
        acc = cbox_mul(acc, z)
        if isinstance(c, Fraction):
            acc = (acc[0] + iv_from_fraction(c), acc[1])
        else:
            acc = (acc[0] + iv.mpf(c), acc[1])
    return acc
