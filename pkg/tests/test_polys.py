import random

from fractions import Fraction

from heightenum.polys import (
    check_irreducible,
    factor_mod_p,
    kronecker,
    poly_discriminant,
    poly_eval,
    poly_mul,
    primes_up_to,
    sturm_real_root_count,
)


def test_sturm_counts():
    assert sturm_real_root_count((-17, 0, 1)) == 2  # x^2 - 17
    assert sturm_real_root_count((1, 0, 1)) == 0  # x^2 + 1
    assert sturm_real_root_count((-2, 0, 0, 1)) == 1  # x^3 - 2
    assert sturm_real_root_count((1, 0, 0, 0, 1)) == 0  # x^4 + 1
    assert sturm_real_root_count((123, -1, 0, 1)) == 1
    assert sturm_real_root_count((11, -1, 0, 0, 1)) == 0


def test_discriminants():
    assert poly_discriminant((-17, 0, 1)) == 68  # 4*17
    assert poly_discriminant((-2, 0, 0, 1)) == -108
    assert poly_discriminant((1, 0, 0, 0, 1)) == 256
    assert poly_discriminant((123, -1, 0, 1)) == 4 - 27 * 123**2


def test_factor_mod_p_reassembles():
    rng = random.Random(5)
    polys_to_try = [
        ((-17, 0, 1), 2),
        ((-17, 0, 1), 13),
        ((1, 0, 0, 0, 1), 2),
        ((1, 0, 0, 0, 1), 17),
        ((-2, 0, 0, 1), 5),
        ((123, -1, 0, 1), 3),
    ]
    for _ in range(40):
        p = rng.choice([2, 3, 5, 7, 11, 13])
        coeffs = tuple(rng.randint(0, p - 1) for _ in range(rng.randint(1, 4))) + (1,)
        polys_to_try.append((coeffs, p))
    for coeffs, p in polys_to_try:
        facs = factor_mod_p(coeffs, p)
        prod = (1,)
        for f, m in facs:
            for _ in range(m):
                prod = poly_mul(prod, f)
        prod = tuple(c % p for c in prod)
        want = tuple(c % p for c in coeffs)
        assert prod == want, (coeffs, p, facs)
        for f, _ in facs:
            # irreducible pieces: degree 1..3 sanity (no roots if degree > 1)
            if len(f) == 3:
                assert all(poly_eval(f, r) % p for r in range(p))


def test_irreducibility():
    assert check_irreducible((-17, 0, 1))
    assert check_irreducible((1, 0, 0, 0, 1))  # x^4+1, reducible mod every p
    assert check_irreducible((11, -1, 0, 0, 1))
    assert not check_irreducible((-4, 0, 1))  # (x-2)(x+2)
    assert not check_irreducible((1, 2, 1))  # (x+1)^2
    assert not check_irreducible((4, 0, 4, 0, 1))  # (x^2+2)^2
    assert not check_irreducible((1, 0, 1, 0, 1))  # (x^2+x+1)(x^2-x+1)
    assert check_irreducible((1, 0, 3, 0, 1))


def test_kronecker_matches_euler_criterion():
    for p in primes_up_to(50):
        if p == 2:
            continue
        for a in range(1, p):
            ec = pow(a, (p - 1) // 2, p)
            want = 1 if ec == 1 else -1
            assert kronecker(a, p) == want


def test_fraction_eval():
    assert poly_eval((1, 2, 1), Fraction(1, 2)) == Fraction(9, 4)
