"""Certified archimedean data: embeddings, Minkowski and log maps, heights.

Roots of the defining polynomial are isolated once per precision level with
a posteriori certification (Smith-style inclusion disks around high-precision
approximations, exact rational disjointness checks, exact bisection for real
roots).  Everything downstream is outward-rounded interval arithmetic, with a
precision ladder for refinement and an exact rational fallback for height
ties.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from mpmath import iv, mp
from mpmath.libmp import from_man_exp, to_rational

from . import intervals as rg
from .errors import PrecisionExhausted, ValidationError, ZeroElement
from .field import FieldElement, NumberField

PRECISION_LADDER = (128, 256, 512, 1024, 2048)
MAX_PRECISION = PRECISION_LADDER[-1]


class Cmp(enum.Enum):
    LE = "le"
    GT = "gt"
    BOUNDARY = "boundary"


def _frac_to_mpf_exact(fr: Fraction):
    den = fr.denominator
    k = den.bit_length() - 1
    if den != 1 << k:
        raise ValueError("exact conversion needs a dyadic rational")
    return mp.make_mpf(from_man_exp(fr.numerator, -k))


def _dyadic_iv(lo: Fraction, hi: Fraction):
    return iv.mpf([_frac_to_mpf_exact(lo), _frac_to_mpf_exact(hi)])


def _dyadic_ceil(fr: Fraction, bits: int) -> Fraction:
    """Smallest dyadic with denominator 2^bits that is >= fr."""
    num = -((-fr.numerator * (1 << bits)) // fr.denominator)
    return Fraction(num, 1 << bits)


def _mpf_fraction(x) -> Fraction:
    return Fraction(*to_rational(x._mpf_))


# ---------------------------------------------------------------------------
# Root isolation


def _certified_root_data(poly, prec: int, r1: int, r2: int):
    """Disjoint certified enclosures for all roots, as exact dyadic data.

    Returns (real_intervals, complex_boxes): real intervals are (lo, hi)
    Fractions; complex boxes are (re_lo, re_hi, im_lo, im_hi) with im_lo > 0
    (upper half plane representatives only).
    """
    n = len(poly) - 1
    if n == 1:
        r = Fraction(-poly[0])
        return [(r, r)], []
    coeffs_desc = [mp.mpf(c) for c in reversed(poly)]
    deriv = tuple(i * poly[i] for i in range(1, len(poly)))
    for attempt in range(5):
        work = prec + 96 + attempt * (prec + 64)
        with mp.workprec(work):
            approx = mp.polyroots(coeffs_desc, maxsteps=400, extraprec=work)
        with rg.iv_prec(work):
            data = []
            ok = True
            for z in approx:
                zre = _mpf_fraction(mp.mpf(z.real) if hasattr(z, "real") else mp.mpf(z))
                zim = _mpf_fraction(mp.mpf(z.imag)) if hasattr(z, "imag") else Fraction(0)
                box = (rg.iv_from_fraction(zre), rg.iv_from_fraction(zim))
                fz = rg.cbox_eval_poly(poly, box)
                fpz = rg.cbox_eval_poly(deriv, box)
                denom = rg.iv_bounds(rg.cbox_abs(fpz))[0]
                if denom <= 0:
                    ok = False
                    break
                rad = _dyadic_ceil(rg.iv_bounds(rg.cbox_abs(fz))[1] * n / denom, work + 16)
                data.append((zre, zim, rad))
            if not ok:
                continue
        # exact pairwise disjointness of inclusion disks
        disjoint = all(
            (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 > (a[2] + b[2]) ** 2
            for i, a in enumerate(data)
            for b in data[i + 1 :]
        )
        if not disjoint:
            continue
        reals = [d for d in data if abs(d[1]) <= d[2]]
        upper = [d for d in data if d[1] > d[2]]
        lower = [d for d in data if d[1] < -d[2]]
        if len(reals) != r1 or len(upper) != r2 or len(lower) != r2:
            continue
        real_ivs = []
        for zre, _zim, rad in sorted(reals, key=lambda d: d[0]):
            real_ivs.append(_bisect_real_root(poly, zre - rad, zre + rad, prec))
        boxes = []
        for zre, zim, rad in sorted(upper, key=lambda d: (d[0], d[1])):
            boxes.append((zre - rad, zre + rad, zim - rad, zim + rad))
        if any(b[2] <= 0 for b in boxes):
            continue
        return real_ivs, boxes
    raise PrecisionExhausted(f"could not certify roots of {list(poly)} at {prec} bits")


def _dyadic_mid(lo: Fraction, hi: Fraction) -> Fraction:
    return (lo + hi) / 2


def _bisect_real_root(poly, lo: Fraction, hi: Fraction, prec: int):
    """Shrink a certified bracket to relative width 2^-prec by exact bisection."""
    from .polys import poly_eval

    scale = max(Fraction(1), abs(lo), abs(hi))
    target = scale / (1 << prec)
    s_lo = poly_eval(poly, lo)
    s_hi = poly_eval(poly, hi)
    if s_lo == 0 or s_hi == 0 or (s_lo > 0) == (s_hi > 0):
        raise PrecisionExhausted("real root bracket lost its sign change")
    neg_low = s_lo < 0
    while hi - lo > target:
        mid = _dyadic_mid(lo, hi)
        v = poly_eval(poly, mid)
        if v == 0:
            raise PrecisionExhausted("dyadic point is a root of the minimal polynomial")
        if (v < 0) == neg_low:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


# ---------------------------------------------------------------------------
# Embedding data with a precision ladder


class _Level:
    """Certified embedding values sigma_v(omega_i) at one precision."""

    __slots__ = ("prec", "real_roots", "complex_roots", "emb")

    def __init__(self, prec, real_roots, complex_roots, emb):
        self.prec = prec
        self.real_roots = real_roots  # list of iv
        self.complex_roots = complex_roots  # list of (re iv, im iv)
        self.emb = emb  # per place: list over basis elements of iv / cbox


class EmbeddingData:
    """Archimedean places of K in the fixed order: reals ascending, then
    upper-half-plane complex representatives by (Re, Im)."""

    def __init__(self, field: NumberField, precision_bits: int = 128):
        if precision_bits < 32:
            raise ValidationError("precision must be at least 32 bits")
        self.field = field
        self.precision_bits = max(precision_bits, PRECISION_LADDER[0])
        self.r1 = field.r1
        self.r2 = field.r2
        self.nplaces = self.r1 + self.r2
        self.local_degrees = (1,) * self.r1 + (2,) * self.r2
        self._levels: dict[int, _Level] = {}
        base = self._level(self.precision_bits)
        self._build_float_layer(base)

    # -- levels ---------------------------------------------------------------

    def _level(self, prec: int) -> _Level:
        lvl = self._levels.get(prec)
        if lvl is not None:
            return lvl
        field = self.field
        reals, boxes = _certified_root_data(field.poly, prec, self.r1, self.r2)
        with rg.iv_prec(prec):
            real_ivs = [_dyadic_iv(lo, hi) for lo, hi in reals]
            box_ivs = [
                (_dyadic_iv(a, b), _dyadic_iv(c, d)) for a, b, c, d in boxes
            ]
            base = self._levels.get(self.precision_bits)
            if base is not None:
                # monotone refinement: intersect with the base enclosures
                real_ivs = [rg.iv_intersect(x, y) for x, y in zip(real_ivs, base.real_roots)]
                box_ivs = [
                    (rg.iv_intersect(a[0], b[0]), rg.iv_intersect(a[1], b[1]))
                    for a, b in zip(box_ivs, base.complex_roots)
                ]
            emb = []
            for v in range(self.r1):
                root = real_ivs[v]
                emb.append([self._eval_basis_real(j, root) for j in range(field.n)])
            for v in range(self.r2):
                box = box_ivs[v]
                emb.append([self._eval_basis_cplx(j, box) for j in range(field.n)])
        lvl = _Level(prec, real_ivs, box_ivs, emb)
        self._levels[prec] = lvl
        return lvl

    def _eval_basis_real(self, j: int, root):
        coeffs = self.field.basis[j]
        acc = iv.mpf(0)
        for c in reversed(coeffs):
            acc = acc * root + rg.iv_from_fraction(c)
        return acc

    def _eval_basis_cplx(self, j: int, box):
        coeffs = self.field.basis[j]
        return rg.cbox_eval_poly(coeffs, box)

    def _build_float_layer(self, lvl: _Level):
        n = self.field.n
        self._f_real = []  # per real place: (mid[j], mag[j])
        for v in range(self.r1):
            mids, mags = [], []
            for j in range(n):
                lo, hi = rg.iv_float_bounds(lvl.emb[v][j])
                mids.append((lo + hi) / 2.0)
                mags.append(max(abs(lo), abs(hi)) + 1e-300)
            self._f_real.append((mids, mags))
        self._f_cplx = []  # per complex place: (re_mid, im_mid, mag)
        for v in range(self.r2):
            rems, imms, mags = [], [], []
            for j in range(n):
                re_lo, re_hi = rg.iv_float_bounds(lvl.emb[self.r1 + v][j][0])
                im_lo, im_hi = rg.iv_float_bounds(lvl.emb[self.r1 + v][j][1])
                rems.append((re_lo + re_hi) / 2.0)
                imms.append((im_lo + im_hi) / 2.0)
                mags.append(math.hypot(max(abs(re_lo), abs(re_hi)), max(abs(im_lo), abs(im_hi))) + 1e-300)
            self._f_cplx.append((rems, imms, mags))

    # -- float fast paths -------------------------------------------------

    def abs_floats(self, coords) -> list[tuple[float, float]]:
        """Per-place outer float bounds for |sigma_v(x)|."""
        out = []
        eps = rg.FLOAT_EPS_MARGIN
        for mids, mags in self._f_real:
            s = 0.0
            e = 0.0
            for c, m, g in zip(coords, mids, mags):
                if c:
                    cf = float(c)
                    s += cf * m
                    e += abs(cf) * g
            err = e * eps + 5e-300
            a = abs(s)
            out.append((max(0.0, a - err), a + err))
        for rems, imms, mags in self._f_cplx:
            sr = si = e = 0.0
            for c, mr, mi, g in zip(coords, rems, imms, mags):
                if c:
                    cf = float(c)
                    sr += cf * mr
                    si += cf * mi
                    e += abs(cf) * g
            err = e * eps + 5e-300
            a = math.hypot(sr, si)
            out.append((max(0.0, a - err), a + err))
        return out

    # -- certified values ---------------------------------------------------

    def value_iv(self, coords, place: int, prec: int):
        """sigma_v(x) as an interval (real place) or box (complex place)."""
        lvl = self._level(prec)
        with rg.iv_prec(prec):
            if place < self.r1:
                acc = iv.mpf(0)
                for c, w in zip(coords, lvl.emb[place]):
                    if c:
                        acc += self._coef_iv(c) * w
                return acc
            acc_re = iv.mpf(0)
            acc_im = iv.mpf(0)
            for c, w in zip(coords, lvl.emb[place]):
                if c:
                    ci = self._coef_iv(c)
                    acc_re += ci * w[0]
                    acc_im += ci * w[1]
            return (acc_re, acc_im)

    @staticmethod
    def _coef_iv(c):
        if isinstance(c, Fraction):
            return rg.iv_from_fraction(c)
        return iv.mpf(c)

    def abs_iv(self, coords, prec: int):
        """Per-place |sigma_v(x)| intervals at the given precision."""
        out = []
        with rg.iv_prec(prec):
            for v in range(self.nplaces):
                val = self.value_iv(coords, v, prec)
                if v < self.r1:
                    out.append(abs(val))
                else:
                    out.append(rg.cbox_abs(val))
        return out


def compute_embeddings(K: NumberField, precision_bits: int = 128) -> EmbeddingData:
    """Isolate all roots of K's defining polynomial and fix the place order."""
    cache = K._caches.setdefault("embeddings", {})
    key = max(precision_bits, PRECISION_LADDER[0])
    if key not in cache:
        cache[key] = EmbeddingData(K, key)
    return cache[key]


# ---------------------------------------------------------------------------
# Maps


def minkowski_map(E: EmbeddingData, x, prec: int | None = None):
    """Phi(x) = (sigma_1(x), ..., Re tau_1(x), Im tau_1(x), ...) as intervals."""
    coords = x.coords if isinstance(x, FieldElement) else x
    prec = prec or E.precision_bits
    out = []
    for v in range(E.r1):
        out.append(E.value_iv(coords, v, prec))
    for v in range(E.r1, E.nplaces):
        re, im = E.value_iv(coords, v, prec)
        out.append(re)
        out.append(im)
    return out


def log_map(E: EmbeddingData, x, prec: int | None = None):
    """Lambda(x)_v = n_v log|sigma_v(x)|, refining until 0 is excluded."""
    coords = x.coords if isinstance(x, FieldElement) else x
    if all(c == 0 for c in coords):
        raise ZeroElement("log map at zero")
    prec = prec or E.precision_bits
    out = []
    for v in range(E.nplaces):
        p = prec
        while True:
            a = E.abs_iv(coords, p)[v]
            if rg.iv_lower(a) > 0:
                break
            p = _next_prec(p)
            if p is None:
                raise PrecisionExhausted("cannot separate |sigma(x)| from zero")
        with rg.iv_prec(p):
            out.append(E.local_degrees[v] * iv.log(a))
    return out


def truncated_log_map(E: EmbeddingData, x, prec: int | None = None):
    return log_map(E, x, prec)[:-1]


def _next_prec(p):
    for q in PRECISION_LADDER:
        if q > p:
            return q
    return None


def h_infinity(E: EmbeddingData, xs, prec: int | None = None):
    """Product over places of max_i ||x_i||_v, as one outward interval."""
    prec = prec or E.precision_bits
    coord_rows = [x.coords if isinstance(x, FieldElement) else x for x in xs]
    if all(all(c == 0 for c in row) for row in coord_rows):
        raise ZeroElement("height of the zero tuple")
    with rg.iv_prec(prec):
        total = iv.mpf(1)
        for v in range(E.nplaces):
            best = None
            for row in coord_rows:
                a = E.abs_iv(row, prec)[v]
                best = a if best is None else rg.iv_max(best, a)
            if E.local_degrees[v] == 2:
                best = best * best
            total = total * best
    return total


def relative_height(K: NumberField, E: EmbeddingData, xs, prec: int | None = None):
    """H_K of the projective point with the given homogeneous coordinates."""
    from .ideals import Ideal

    elems = [x if isinstance(x, FieldElement) else K.element(x) for x in xs]
    den = 1
    for x in elems:
        d = x.denominator_lcm()
        den = den * d // math.gcd(den, d)
    ints = [x * den for x in elems]
    a = Ideal.from_generators(K, [x for x in ints if not x.is_zero()])
    h = h_infinity(E, ints, prec)
    with rg.iv_prec(prec or E.precision_bits):
        return h / iv.mpf(int(a.norm))


def certify_le(value, bound: Fraction, refine, exact=None) -> Cmp:
    """Decide value <= bound with escalation and an exact fallback.

    ``refine(prec)`` recomputes the interval at the given precision (None
    when exhausted); ``exact()`` may return the exact rational value when the
    structure of the quantity allows it.  Unresolved straddles come back as
    BOUNDARY and callers keep the object, flagged.
    """
    bound = Fraction(bound)
    cur = value
    prec = None
    while True:
        lo, hi = rg.iv_bounds(cur)
        if hi <= bound:
            return Cmp.LE
        if lo > bound:
            return Cmp.GT
        prec = _next_prec(prec or PRECISION_LADDER[0])
        nxt = refine(prec) if prec is not None else None
        if nxt is None:
            break
        cur = nxt
    if exact is not None:
        q = exact()
        if q is not None:
            return Cmp.LE if q <= bound else Cmp.GT
    return Cmp.BOUNDARY


def embedding_permutation(E: EmbeddingData, matrix_rows, prec: int | None = None):
    """How a ring automorphism permutes the places.

    For each place v returns (w, conj) meaning sigma_v after the automorphism
    equals place w's embedding, conjugated when conj is True.  Certified by
    disk disjointness; escalates on ambiguity.
    """
    K = E.field
    gen = K.gen
    img = gen.apply_matrix(matrix_rows)
    prec = prec or E.precision_bits
    while True:
        lvl = E._level(prec)
        result = []
        ambiguous = False
        with rg.iv_prec(prec):
            for v in range(E.nplaces):
                val = E.value_iv(img.coords, v, prec)
                if v < E.r1:
                    box = (val, iv.mpf(0))
                else:
                    box = val
                hits = []
                for w in range(E.r1):
                    root = (lvl.real_roots[w], iv.mpf(0))
                    if _boxes_overlap(box, root):
                        hits.append((w, False))
                for w in range(E.r2):
                    re, im = lvl.complex_roots[w]
                    if _boxes_overlap(box, (re, im)):
                        hits.append((E.r1 + w, False))
                    if _boxes_overlap(box, (re, -im)):
                        hits.append((E.r1 + w, True))
                if len(hits) != 1:
                    ambiguous = True
                    break
                result.append(hits[0])
        if not ambiguous:
            return result
        prec = _next_prec(prec)
        if prec is None:
            raise PrecisionExhausted("automorphism image does not separate the roots")


def _boxes_overlap(a, b) -> bool:
    alo, ahi = rg.iv_bounds(a[0])
    blo, bhi = rg.iv_bounds(b[0])
    if ahi < blo or bhi < alo:
        return False
    alo, ahi = rg.iv_bounds(a[1])
    blo, bhi = rg.iv_bounds(b[1])
    return not (ahi < blo or bhi < alo)
