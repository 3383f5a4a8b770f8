import random

from fractions import Fraction

import pytest

from heightenum.errors import ValidationError
from heightenum.field import NumberField


def gaussian():
    return NumberField((1, 0, 1))


def sqrt17():
    # integral basis {1, (1+g)/2} with g = sqrt(17)
    return NumberField((-17, 0, 1), integral_basis=[[1, 0], [Fraction(1, 2), Fraction(1, 2)]])


def test_basic_invariants():
    K = gaussian()
    assert K.n == 2
    assert K.discriminant == -4
    assert K.signature == (0, 1)
    assert K.unit_rank == 0

    L = sqrt17()
    assert L.discriminant == 17
    assert L.signature == (2, 0)
    assert L.unit_rank == 1

    M = NumberField((-2, 0, 0, 1))
    assert M.discriminant == -108
    assert M.signature == (1, 1)


def test_non_closed_basis_rejected():
    with pytest.raises(ValidationError):
        # {1, g/3} is not closed under multiplication for g = sqrt(17)
        NumberField((-17, 0, 1), integral_basis=[[1, 0], [0, Fraction(1, 3)]])


def test_element_arithmetic_gaussian():
    K = gaussian()
    x = K.element((1, 1))  # 1 + i
    assert x.norm() == 2
    assert (x * x).coords == (0, 2)
    inv = x.inverse()
    assert (x * inv) == K.one
    assert inv.coords == (Fraction(1, 2), Fraction(-1, 2))
    assert K.element((0, 0)).norm() == 0


def test_norm_examples():
    L = sqrt17()
    # 4 + sqrt(17) = 3 + 2*omega with omega = (1+sqrt17)/2
    eps = L.element((3, 2))
    assert eps.norm() == -1
    assert (eps * eps.inverse()) == L.one
    g = L.gen
    assert g.norm() == -17
    assert (g * g).coords == (17, 0)


def test_norm_multiplicative_random():
    K = NumberField((-2, 0, 0, 1))
    rng = random.Random(42)
    for _ in range(60):
        a = K.element(tuple(rng.randint(-5, 5) for _ in range(3)))
        b = K.element(tuple(rng.randint(-5, 5) for _ in range(3)))
        assert (a * b).norm() == a.norm() * b.norm()


def test_inverse_roundtrip_random():
    L = sqrt17()
    rng = random.Random(9)
    for _ in range(40):
        a = L.element((rng.randint(-9, 9), rng.randint(-9, 9)))
        if a.is_zero():
            continue
        assert (a * a.inverse()) == L.one
        assert (a / a) == L.one


def test_degree_one_field():
    Q = NumberField((0, 1))
    assert Q.n == 1
    assert Q.discriminant == 1
    assert Q.signature == (1, 0)
    x = Q.element((5,))
    assert x.norm() == 5
    assert (x * x).coords == (25,)


def test_power_coords_roundtrip():
    L = sqrt17()
    g = L.from_power_coords((0, 1))  # sqrt(17) over the power basis
    assert g == L.gen
    assert g.coords == (-1, 2)  # sqrt17 = -1 + 2*omega


def test_reducible_poly_rejected():
    with pytest.raises(ValidationError):
        NumberField((-4, 0, 1))
