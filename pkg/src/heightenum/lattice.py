"""Lattice geometry: LLL reduction, the unit-log system, H-polytopes and
integer point enumeration, and fundamental volumes.

The polytope enumerator works on exact rational constraint data (dyadic
midpoints of certified intervals, with any approximation slack already folded
into the right-hand sides by the caller).  Bounds during the recursive
coordinate sweep are computed in floats with a guaranteed widening, and exact
arithmetic decides membership at the leaves, so the emitted set is exactly
the integer points of the stated inflated polytope.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from mpmath import iv

from . import intervals as rg
from .embeddings import MAX_PRECISION, PRECISION_LADDER, EmbeddingData, log_map
from .errors import (
    DependentUnits,
    NotUnits,
    PrecisionExhausted,
    RankDeficient,
    SingularMap,
    Unbounded,
)
from .field import FieldElement, NumberField
from .intmat import det_fraction, invert_fraction

DEFAULT_DELTA = Fraction(1, 1 << 30)
DEFAULT_LLL_DELTA = Fraction(99, 100)


# ---------------------------------------------------------------------------
# LLL


def lll_reduce(basis, delta=DEFAULT_LLL_DELTA):
    """Exact LLL reduction of linearly independent rational vectors.

    Returns (reduced, transform); ``reduced[i] = sum_j transform[i][j] *
    basis[j]`` and the transform is integer unimodular.
    """
    k = len(basis)
    vecs = [list(map(Fraction, b)) for b in basis]
    m = len(vecs[0]) if vecs else 0
    if any(len(v) != m for v in vecs):
        raise ValueError("vectors must share one length")
    trans = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    if k == 0:
        return (), ()

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    def gram_schmidt():
        star = []
        mu = [[Fraction(0)] * k for _ in range(k)]
        norms = []
        for i in range(k):
            w = list(vecs[i])
            for j in range(i):
                if norms[j] == 0:
                    raise RankDeficient("dependent input vectors")
                mu[i][j] = dot(vecs[i], star[j]) / norms[j]
                w = [a - mu[i][j] * b for a, b in zip(w, star[j])]
            star.append(w)
            norms.append(dot(w, w))
        if any(n == 0 for n in norms):
            raise RankDeficient("dependent input vectors")
        return star, mu, norms

    star, mu, norms = gram_schmidt()
    delta = Fraction(delta)
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                vecs[i] = [a - q * b for a, b in zip(vecs[i], vecs[j])]
                trans[i] = [a - q * b for a, b in zip(trans[i], trans[j])]
                star, mu, norms = gram_schmidt()
        if i >= 1 and norms[i] < (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            vecs[i - 1], vecs[i] = vecs[i], vecs[i - 1]
            trans[i - 1], trans[i] = trans[i], trans[i - 1]
            star, mu, norms = gram_schmidt()
            i = max(i - 1, 1)
        else:
            i += 1
    return tuple(tuple(v) for v in vecs), tuple(tuple(t) for t in trans)


# ---------------------------------------------------------------------------
# Unit system


class UnitSystem:
    """LLL-reduced fundamental units with certified log data.

    ``log_cols[j]`` is Lambda(eps_j) as intervals, ``D[v]`` the per-place
    maximum over the closed unit parallelotope (attained on the vertex set),
    and ``regulator`` the absolute determinant of the truncated log matrix.
    """

    def __init__(self, field: NumberField, embeddings: EmbeddingData, units, prec: int):
        self.field = field
        self.embeddings = embeddings
        self.units = list(units)
        self.rank = len(self.units)
        self.prec = prec
        nplaces = embeddings.nplaces
        with rg.iv_prec(prec):
            self.log_cols = [log_map(embeddings, u, prec) for u in self.units]
            if self.rank:
                half = rg.iv_from_fraction(Fraction(1, 2))
                verts = []
                for signs in itertools.product((-1, 1), repeat=self.rank):
                    vert = []
                    for v in range(nplaces):
                        acc = iv.mpf(0)
                        for s, col in zip(signs, self.log_cols):
                            acc += (half if s > 0 else -half) * col[v]
                        vert.append(acc)
                    verts.append(vert)
                self.D = [verts[0][v] for v in range(nplaces)]
                for vert in verts[1:]:
                    self.D = [rg.iv_max(a, b) for a, b in zip(self.D, vert)]
                self.regulator = abs(_iv_det([[self.log_cols[j][v] for j in range(self.rank)]
                                              for v in range(self.rank)]))
            else:
                self.D = [iv.mpf(0) for _ in range(nplaces)]
                self.regulator = iv.mpf(1)
        self.D_upper = [rg.iv_upper(d) for d in self.D]
        self.sum_D = sum(self.D, iv.mpf(0))

    def unit_power(self, exponents) -> FieldElement:
        out = self.field.one
        for u, e in zip(self.units, exponents):
            if e:
                out = out * (u**e)
        return out


def _iv_det(mat):
    n = len(mat)
    if n == 0:
        return iv.mpf(1)
    if n == 1:
        return mat[0][0]
    total = iv.mpf(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * _iv_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def build_unit_system(
    K: NumberField,
    E: EmbeddingData,
    raw_units,
    lll_delta=DEFAULT_LLL_DELTA,
) -> UnitSystem:
    """Validate units, LLL-reduce their log vectors, and package the system."""
    r = K.unit_rank
    raw_units = list(raw_units)
    if len(raw_units) != r:
        raise DependentUnits(f"expected {r} independent units, got {len(raw_units)}")
    for u in raw_units:
        if not u.is_integral() or abs(u.norm()) != 1:
            raise NotUnits(f"element with norm {u.norm()} is not a unit")
    if r == 0:
        return UnitSystem(K, E, [], E.precision_bits)

    prec = E.precision_bits
    while True:
        logs = [log_map(E, u, prec) for u in raw_units]
        widths = [rg.iv_upper(c) - rg.iv_lower(c) for col in logs for c in col]
        with rg.iv_prec(prec):
            det = _iv_det([[logs[j][v] for j in range(r)] for v in range(r)])
        dlo, dhi = rg.iv_bounds(abs(det))
        if max(widths) < Fraction(1, 1 << 40) and dlo > 0:
            break
        nxt = next((q for q in PRECISION_LADDER if q > prec), None)
        if nxt is None:
            if dlo <= 0:
                raise DependentUnits("unit logs do not span a full-rank lattice")
            raise PrecisionExhausted("unit logs not separable at the precision cap")
        prec = nxt

    mids = [tuple((rg.iv_lower(c) + rg.iv_upper(c)) / 2 for c in col) for col in logs]
    _, trans = lll_reduce(mids, lll_delta)
    new_units = []
    for row in trans:
        u = K.one
        for e, base in zip(row, raw_units):
            if e:
                u = u * (base**e)
        new_units.append(u)
    return UnitSystem(K, E, new_units, prec)


# ---------------------------------------------------------------------------
# Polytopes


class Polytope:
    """H-polytope {x : A x <= b + delta} with exact rational data."""

    __slots__ = ("rows", "dim", "delta")

    def __init__(self, rows, dim: int, delta: Fraction = DEFAULT_DELTA):
        self.rows = [(tuple(Fraction(c) for c in coeffs), Fraction(rhs)) for coeffs, rhs in rows]
        self.dim = dim
        self.delta = Fraction(delta)

    def contains(self, x) -> bool:
        return all(
            sum(c * xi for c, xi in zip(coeffs, x)) <= rhs + self.delta
            for coeffs, rhs in self.rows
        )

    def __repr__(self):
        return f"Polytope(dim={self.dim}, rows={len(self.rows)})"


def transport(P: Polytope, matrix) -> Polytope:
    """Preimage polytope of P under the linear map with the given columns.

    ``matrix`` is a rational matrix as a tuple of columns; M x in P exactly
    when x is in the transported polytope.
    """
    cols = tuple(tuple(Fraction(v) for v in col) for col in matrix)
    n = len(cols)
    rows_m = tuple(tuple(cols[j][i] for j in range(n)) for i in range(len(cols[0])))
    if len(rows_m) == n and det_fraction(rows_m) == 0:
        raise SingularMap("transport through a singular matrix")
    new_rows = []
    for coeffs, rhs in P.rows:
        new_coeffs = tuple(
            sum(coeffs[i] * rows_m[i][j] for i in range(len(coeffs))) for j in range(n)
        )
        new_rows.append((new_coeffs, rhs))
    return Polytope(new_rows, n, P.delta)


def _fm_eliminate(rows, var, delta):
    """One Fourier-Motzkin step, exact; returns rows without variable ``var``."""
    pos, neg, zero = [], [], []
    for coeffs, rhs in rows:
        c = coeffs[var]
        if c > 0:
            pos.append((coeffs, rhs))
        elif c < 0:
            neg.append((coeffs, rhs))
        else:
            zero.append((coeffs, rhs))
    out = {}

    def _push(coeffs, rhs):
        scale = next((abs(c) for c in coeffs if c), None)
        if scale is None:
            return  # constant row; feasibility handled at enumeration time
        coeffs = tuple(c / scale for c in coeffs)
        rhs = rhs / scale
        prev = out.get(coeffs)
        if prev is None or rhs < prev:
            out[coeffs] = rhs

    for coeffs, rhs in zero:
        _push(coeffs, rhs)
    for (pc, pr) in pos:
        a = pc[var]
        for (nc, nr) in neg:
            b = -nc[var]
            coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
            _push(coeffs, b * pr + a * nr)
    return [(c, r) for c, r in out.items()]


class _DepthSystem:
    __slots__ = ("rows_f", "rows_exact")

    def __init__(self, rows):
        self.rows_exact = rows
        self.rows_f = [
            (tuple(float(c) for c in coeffs), float(rhs)) for coeffs, rhs in rows
        ]


def integer_points(P: Polytope, exact_leaf: bool = True, first_range=None):
    """All integer vectors in the inflated polytope, lexicographically.

    With ``exact_leaf`` the final membership test is exact rational
    arithmetic; otherwise leaves are accepted on outward-rounded float
    evaluation (callers then apply their own certified filters).
    ``first_range`` restricts the first coordinate (for partitioning work
    across workers).
    """
    dim = P.dim
    if dim == 0:
        yield ()
        return
    systems = [None] * dim
    rows = P.rows
    systems[dim - 1] = _DepthSystem(rows)
    for d in range(dim - 1, 0, -1):
        rows = _fm_eliminate(rows, d, P.delta)
        systems[d - 1] = _DepthSystem(rows)

    deltaf = float(P.delta)
    leaf_rows = systems[dim - 1]

    def bounds_at(depth, prefix):
        lo = None
        hi = None
        for coeffs_f, rhs_f in systems[depth].rows_f:
            c = coeffs_f[depth]
            acc = rhs_f + deltaf
            mag = abs(rhs_f)
            for i in range(depth):
                acc -= coeffs_f[i] * prefix[i]
                mag += abs(coeffs_f[i] * prefix[i])
            widen = 1e-9 * (mag + 1.0) + 1e-9
            if c > 0.0:
                v = (acc + widen) / c
                hi = v if hi is None or v < hi else hi
            elif c < 0.0:
                v = (acc + widen) / c
                lo = v if lo is None or v > lo else lo
            else:
                if acc < -widen:
                    return None  # prefix certainly infeasible
        if lo is None or hi is None:
            raise Unbounded(f"no finite bound for coordinate {depth}")
        return math.ceil(lo - 1e-9), math.floor(hi + 1e-9)

    def leaf_ok(x):
        if exact_leaf:
            return all(
                sum(c * xi for c, xi in zip(coeffs, x)) <= rhs + P.delta
                for coeffs, rhs in leaf_rows.rows_exact
            )
        for coeffs_f, rhs_f in leaf_rows.rows_f:
            acc = 0.0
            mag = 0.0
            for c, xi in zip(coeffs_f, x):
                acc += c * xi
                mag += abs(c * xi)
            if acc > rhs_f + deltaf + 1e-9 * (mag + abs(rhs_f) + 1.0):
                return False
        return True

    prefix = [0] * dim

    def rec(depth):
        b = bounds_at(depth, prefix)
        if b is None:
            return
        lo, hi = b
        if depth == 0 and first_range is not None:
            lo = max(lo, first_range[0])
            hi = min(hi, first_range[1])
        for v in range(lo, hi + 1):
            prefix[depth] = v
            if depth == dim - 1:
                if leaf_ok(tuple(prefix)):
                    yield tuple(prefix)
            else:
                yield from rec(depth + 1)

    yield from rec(0)


def first_coordinate_range(P: Polytope):
    """Certified integer range of the first coordinate (for partitioning)."""
    rows = P.rows
    for d in range(P.dim - 1, 0, -1):
        rows = _fm_eliminate(rows, d, P.delta)
    lo = None
    hi = None
    for coeffs, rhs in rows:
        c = coeffs[0]
        if c > 0:
            v = (rhs + P.delta) / c
            hi = v if hi is None or v < hi else hi
        elif c < 0:
            v = (rhs + P.delta) / c
            lo = v if lo is None or v > lo else lo
    if lo is None or hi is None:
        raise Unbounded("no finite bound for the first coordinate")
    return math.floor(lo), math.ceil(hi)


# ---------------------------------------------------------------------------
# Minkowski-space helpers


def minkowski_columns_iv(E: EmbeddingData, basis_elements, prec: int):
    """Columns Phi(alpha_j) as interval vectors in R^n (Re/Im split)."""
    cols = []
    with rg.iv_prec(prec):
        for el in basis_elements:
            col = []
            coords = el.coords
            for v in range(E.r1):
                col.append(E.value_iv(coords, v, prec))
            for v in range(E.r1, E.nplaces):
                re, im = E.value_iv(coords, v, prec)
                col.append(re)
                col.append(im)
            cols.append(col)
    return cols


def _iv_mid(x) -> Fraction:
    lo, hi = rg.iv_bounds(x)
    return (lo + hi) / 2


def _iv_rad(x) -> Fraction:
    lo, hi = rg.iv_bounds(x)
    return (hi - lo) / 2


def preimage_box_polytope(
    cols_iv,
    radii: list[Fraction],
    delta: Fraction = DEFAULT_DELTA,
    extra_rows=(),
):
    """Polytope of s with  sum_j s_j Phi(alpha_j) inside the box |y_i| <= r_i.

    The interval matrix is replaced by its exact dyadic midpoint; the
    approximation error is folded into the right-hand sides via a certified
    bound on the feasible coordinates, so no true solution is ever excluded.
    """
    n = len(cols_iv)
    mid = tuple(tuple(_iv_mid(cols_iv[j][i]) for j in range(n)) for i in range(n))  # rows
    rad = tuple(tuple(_iv_rad(cols_iv[j][i]) for j in range(n)) for i in range(n))
    inv = invert_fraction(mid)
    if inv is None:
        raise SingularMap("Minkowski matrix is numerically singular")
    # crude certified bound on |s|_inf over the true feasible set:
    # s = Sinv_true * y with |y_i| <= r_i; Sinv_true close to inv since the
    # interval radii are ~2^-prec.
    # |s|_inf <= inv_norm (rmax + rad_norm |s|_inf)  for any true-feasible s
    inv_norm = max(sum(abs(x) for x in row) for row in inv)
    rmax = max(radii) if radii else Fraction(0)
    rad_norm = max(sum(x for x in row) for row in rad)
    denom = 1 - inv_norm * rad_norm
    if denom <= 0:
        raise PrecisionExhausted("Minkowski matrix intervals too wide")
    s_bound = inv_norm * rmax / denom + 1
    rows = []
    for i in range(n):
        slack = sum(rad[i][j] for j in range(n)) * s_bound
        coeffs = mid[i]
        rows.append((coeffs, radii[i] + slack))
        rows.append((tuple(-c for c in coeffs), radii[i] + slack))
    for coeffs, rhs in extra_rows:
        rows.append((tuple(Fraction(c) for c in coeffs), Fraction(rhs)))
    return Polytope(rows, n, delta)


def fundamental_volume(K: NumberField, a=None, prec: int = 128):
    """2^{-r2} |disc|^{1/2} N(a) as an interval."""
    from .ideals import Ideal

    norm = 1 if a is None else int(a.norm)
    with rg.iv_prec(prec):
        return (
            iv.sqrt(iv.mpf(abs(K.discriminant)))
            * iv.mpf(norm)
            / iv.mpf(2**K.r2)
        )


def minkowski_det_iv(E: EmbeddingData, basis_elements, prec: int = 128):
    """|det| of the Minkowski basis matrix, for cross-checking volumes."""
    cols = minkowski_columns_iv(E, basis_elements, prec)
    n = len(cols)
    with rg.iv_prec(prec):
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        return abs(_iv_det(mat))
