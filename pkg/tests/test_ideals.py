import random

from fractions import Fraction

import pytest

from heightenum.errors import ZeroIdeal
from heightenum.field import NumberField
from heightenum.ideals import Ideal


def gaussian():
    return NumberField((1, 0, 1))


def sqrt17():
    return NumberField((-17, 0, 1), integral_basis=[[1, 0], [Fraction(1, 2), Fraction(1, 2)]])


def rationals():
    return NumberField((0, 1))


def test_gcd_over_q():
    Q = rationals()
    a = Ideal.from_generators(Q, [Q.element((4,)), Q.element((6,))])
    assert a.norm == 2
    assert a == Ideal.from_generators(Q, [Q.element((2,))])
    assert a != Ideal.from_generators(Q, [Q.element((3,))])


def test_gaussian_hnf_example():
    K = gaussian()
    a = Ideal.from_generators(K, [K.element((1, 1))])
    assert a.hnf == ((2, 1), (0, 1))
    assert a.norm == 2
    b = Ideal.from_generators(K, [K.element((1, -1))])
    assert a == b  # (1-i) = -i(1+i)


def test_unit_ideal_from_fractional_generator_set():
    L = sqrt17()
    a = Ideal.from_generators(L, [L.one, L.element((Fraction(1, 2), Fraction(1, 2)))])
    # contains 1 and is a fractional module; scaled version has norm dividing 2^2
    assert a.contains(L.one)


def test_zero_ideal_raises():
    K = gaussian()
    with pytest.raises(ZeroIdeal):
        Ideal.from_generators(K, [K.zero, K.zero])


def test_product_and_inverse():
    Q = rationals()
    two = Ideal.from_generators(Q, [Q.element((2,))])
    inv = two.inverse()
    assert inv.denominator == 2
    assert (two * inv) == Ideal.unit_ideal(Q)

    K = gaussian()
    p = Ideal.from_generators(K, [K.element((1, 1))])
    q = Ideal.from_generators(K, [K.element((1, -1))])
    assert (p * q) == Ideal.from_generators(K, [K.element((2, 0))])
    assert (p * p.inverse()) == Ideal.unit_ideal(K)


def test_identity_product_random():
    L = sqrt17()
    rng = random.Random(4)
    one = Ideal.unit_ideal(L)
    for _ in range(25):
        x = L.element((rng.randint(-6, 6), rng.randint(-6, 6)))
        if x.is_zero():
            continue
        a = Ideal.from_generators(L, [x])
        assert (a * one) == a
        assert abs(int(a.norm)) == abs(x.norm())
        assert (a * a.inverse()) == one


def test_generator_permutation_invariance():
    K = gaussian()
    rng = random.Random(12)
    for _ in range(20):
        gens = [K.element((rng.randint(-4, 4), rng.randint(-4, 4))) for _ in range(3)]
        if all(g.is_zero() for g in gens):
            continue
        a = Ideal.from_generators(K, gens)
        rng.shuffle(gens)
        assert Ideal.from_generators(K, gens) == a
        # multiplying a generator by a unit does not change the ideal
        i = K.element((0, 1))
        gens2 = [gens[0] * i] + gens[1:]
        if not all(g.is_zero() for g in gens2):
            assert Ideal.from_generators(K, gens2) == a


def test_membership():
    K = gaussian()
    a = Ideal.from_generators(K, [K.element((1, 1))])
    assert a.contains(K.element((2, 0)))
    assert a.contains(K.element((1, 1)))
    assert not a.contains(K.one)
    inv = a.inverse()
    assert inv.contains(K.one)
    assert inv.contains(K.element((Fraction(1, 2), Fraction(-1, 2))))
