import random

from fractions import Fraction

import pytest

from heightenum.embeddings import (
    Cmp,
    certify_le,
    compute_embeddings,
    h_infinity,
    log_map,
    minkowski_map,
    relative_height,
)
from heightenum.errors import ZeroElement
from heightenum.field import NumberField
from heightenum.intervals import iv_bounds, iv_contains_zero


def _contains(ivx, value: float, slack=1e-12):
    lo, hi = iv_bounds(ivx)
    return float(lo) - slack <= value <= float(hi) + slack


def sqrt17():
    return NumberField((-17, 0, 1), integral_basis=[[1, 0], [Fraction(1, 2), Fraction(1, 2)]])


def test_root_isolation_shapes():
    E = compute_embeddings(NumberField((-17, 0, 1)))
    assert E.r1 == 2 and E.r2 == 0
    lvl = E._level(E.precision_bits)
    lo, hi = iv_bounds(lvl.real_roots[0])
    assert float(lo) < -4.123 < float(hi) or abs(float(lo) + 4.1231) < 1e-3
    assert _contains(lvl.real_roots[1], 17**0.5)

    E2 = compute_embeddings(NumberField((1, 0, 1)))
    assert E2.r1 == 0 and E2.r2 == 1
    re, im = E2._level(E2.precision_bits).complex_roots[0]
    assert _contains(re, 0.0) and _contains(im, 1.0)

    E3 = compute_embeddings(NumberField((-2, 0, 0, 1)))
    assert (E3.r1, E3.r2) == (1, 1)
    assert _contains(E3._level(E3.precision_bits).real_roots[0], 2 ** (1 / 3))
    re, im = E3._level(E3.precision_bits).complex_roots[0]
    assert _contains(re, -0.62996052494743658) and _contains(im, 1.0911236359717214)


def test_minkowski_map_values():
    K = sqrt17()
    E = compute_embeddings(K)
    one = minkowski_map(E, K.one)
    assert all(_contains(c, 1.0) for c in one[:1])
    g = K.gen  # sqrt(17)
    vals = minkowski_map(E, g)
    s = 17**0.5
    assert _contains(vals[0], -s) and _contains(vals[1], s)

    Ki = NumberField((1, 0, 1))
    Ei = compute_embeddings(Ki)
    v = minkowski_map(Ei, Ki.element((1, 1)))
    assert _contains(v[0], 1.0) and _contains(v[1], 1.0)


def test_log_map():
    K = sqrt17()
    E = compute_embeddings(K)
    eps = K.element((3, 2))  # 4 + sqrt(17)
    lam = log_map(E, eps)
    import math

    val = math.log(4 + 17**0.5)
    assert _contains(lam[0], -val) or _contains(lam[0], val)
    assert _contains(lam[1], -val) or _contains(lam[1], val)
    total = lam[0] + lam[1]
    assert iv_contains_zero(total)

    Ki = NumberField((1, 0, 1))
    Ei = compute_embeddings(Ki)
    two = log_map(Ei, Ki.element((2, 0)))
    assert _contains(two[0], 2 * math.log(2))

    with pytest.raises(ZeroElement):
        log_map(E, K.zero)


def test_log_map_roots_of_unity_contain_zero():
    Ki = NumberField((1, 0, 1))
    Ei = compute_embeddings(Ki)
    for coords in [(1, 0), (-1, 0), (0, 1), (0, -1)]:
        lam = log_map(Ei, Ki.element(coords))
        assert all(iv_contains_zero(c) for c in lam)


def test_h_infinity_examples():
    Q = NumberField((0, 1))
    EQ = compute_embeddings(Q)
    assert _contains(h_infinity(EQ, [Q.element((2,)), Q.element((3,))]), 3.0)
    assert _contains(h_infinity(EQ, [Q.element((1,)), Q.element((0,))]), 1.0)

    Ki = NumberField((1, 0, 1))
    Ei = compute_embeddings(Ki)
    got = h_infinity(Ei, [Ki.element((1, 1)), Ki.one])
    assert _contains(got, 2.0)


def test_relative_height_examples():
    Q = NumberField((0, 1))
    EQ = compute_embeddings(Q)
    h = relative_height(Q, EQ, [Q.element((2,)), Q.element((4,)), Q.element((6,))])
    lo, hi = iv_bounds(h)
    assert lo <= 3 <= hi and hi - lo < Fraction(1, 10**20)

    Ki = NumberField((1, 0, 1))
    Ei = compute_embeddings(Ki)
    h2 = relative_height(Ki, Ei, [Ki.element((1, 1)), Ki.one])
    lo, hi = iv_bounds(h2)
    assert lo <= 2 <= hi

    # scaling invariance including fractional scalings
    h3 = relative_height(Ki, Ei, [Ki.element((1, 1)) * Fraction(3, 7), Ki.one * Fraction(3, 7)])
    lo3, hi3 = iv_bounds(h3)
    assert lo3 <= 2 <= hi3


def test_certify_le():
    K = sqrt17()
    E = compute_embeddings(K)

    twenty = K.element((20, 0))
    val = h_infinity(E, [twenty, K.one])

    def refine(prec):
        return h_infinity(E, [twenty, K.one], prec)

    # H((20,1)) = 400 exactly (rational coordinates collapse the interval)
    assert certify_le(val, Fraction(400), refine, exact=lambda: Fraction(400)) is Cmp.LE
    assert certify_le(val, Fraction(399), refine, exact=lambda: Fraction(400)) is Cmp.GT
    assert certify_le(val, Fraction(401), refine) is Cmp.LE

    # a genuinely irrational tie: H((2*sqrt2, 1)) = 8 over Q(sqrt2)
    K2 = NumberField((-2, 0, 1))
    E2 = compute_embeddings(K2)
    tup = [K2.element((0, 2)), K2.one]
    val2 = h_infinity(E2, tup)

    def refine2(prec):
        return h_infinity(E2, tup, prec)

    assert certify_le(val2, Fraction(8), refine2) is Cmp.BOUNDARY
    assert certify_le(val2, Fraction(8), refine2, exact=lambda: Fraction(8)) is Cmp.LE
    assert certify_le(val2, Fraction(9), refine2) is Cmp.LE
    assert certify_le(val2, Fraction(7), refine2) is Cmp.GT


def test_scaling_lemma_interval_overlap():
    K = sqrt17()
    E = compute_embeddings(K)
    rng = random.Random(3)
    for _ in range(10):
        lam = K.element((rng.randint(-4, 4), rng.randint(-4, 4)))
        if lam.is_zero():
            continue
        xs = [K.element((rng.randint(-5, 5), rng.randint(-5, 5))) for _ in range(2)]
        if all(x.is_zero() for x in xs):
            continue
        left = h_infinity(E, [lam * x for x in xs])
        right = h_infinity(E, xs)
        npl = abs(lam.norm())
        llo, lhi = iv_bounds(left)
        rlo, rhi = iv_bounds(right)
        assert llo <= npl * rhi and npl * rlo <= lhi
