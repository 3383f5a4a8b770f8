import random

from fractions import Fraction

from heightenum.intmat import (
    column_hnf,
    column_hnf_transform,
    det_bareiss,
    det_fraction,
    hnf_solve,
    integer_kernel,
    invert_fraction,
    mat_vec,
)


def test_det_bareiss_small():
    assert det_bareiss(((2, 1), (0, 3))) == 6
    assert det_bareiss(((1, 2), (2, 4))) == 0
    assert det_bareiss(((0, 1, 0), (1, 0, 0), (0, 0, 5))) == -5


def test_det_fraction_matches_bareiss():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 4)
        m = tuple(tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n))
        assert det_fraction(m) == det_bareiss(m)


def test_hnf_gaussian_example():
    # Z-span of (1+i)*{1, i} in basis {1, i}
    cols = [(1, 1), (-1, 1)]
    assert column_hnf(cols, 2) == ((2, 1), (0, 1))


def test_hnf_is_canonical_and_spans_same_lattice():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 4)
        cols = [tuple(rng.randint(-8, 8) for _ in range(n)) for _ in range(n + rng.randint(0, 3))]
        h = column_hnf(cols, n)
        if h is None:
            continue
        # upper triangular, positive diagonal, reduced off-diagonal
        for i in range(n):
            assert h[i][i] > 0
            for j in range(n):
                if i > j:
                    assert h[i][j] == 0
                elif i < j:
                    assert 0 <= h[i][j] < h[i][i]
        # idempotent
        hcols = [tuple(h[i][j] for i in range(n)) for j in range(n)]
        assert column_hnf(hcols, n) == h
        # every input column is in the span
        for c in cols:
            assert hnf_solve(h, c) is not None


def test_transform_tracks_column_ops():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 3)
        m = n + rng.randint(0, 2)
        cols = [tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(m)]
        pivots, work, umat = column_hnf_transform(cols, n)
        for j in range(m):
            expect = tuple(
                sum(cols[k][i] * umat[k][j] for k in range(m)) for i in range(n)
            )
            assert expect == tuple(work[j])


def test_integer_kernel():
    rows = [(2, 4, 6)]
    ker = integer_kernel(rows, 3)
    assert len(ker) == 2
    for v in ker:
        assert sum(r * x for r, x in zip(rows[0], v)) == 0


def test_invert_fraction_roundtrip():
    m = ((Fraction(1), Fraction(1, 2)), (Fraction(0), Fraction(1, 3)))
    inv = invert_fraction(m)
    prod = tuple(
        tuple(sum(m[i][k] * inv[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )
    assert prod == ((1, 0), (0, 1))
    assert mat_vec(m, (2, 6)) == (5, 2)
