"""Exact integer/rational matrix helpers: determinants, HNF, kernels, solving.

Matrices are tuples of row tuples.  The Hermite form used throughout is the
column-style one: the output columns span the same Z-module as the input
columns, the matrix is upper triangular with positive diagonal, and in every
pivot row the entries to the right of the pivot are reduced modulo it.  That
makes equal modules produce literally equal matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def identity_matrix(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(rows, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in rows)


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def transpose(rows):
    return tuple(zip(*rows))


def det_bareiss(mat) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def det_fraction(mat) -> Fraction:
    """Determinant of a square matrix with Fraction/int entries."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    den = 1
    for row in mat:
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
    scaled = tuple(tuple(int(x * den) for x in row) for row in mat)
    return Fraction(det_bareiss(scaled), den**n)


def _egcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def column_hnf_transform(cols, n: int):
    """Column HNF of the module spanned by ``cols`` (length-n int tuples).

    Returns ``(pivots, work, U)`` where ``work`` is the list of transformed
    columns, ``pivots[r]`` is the index in ``work`` of the pivot column for
    row ``r`` (or None), and ``U`` is the unimodular column transform with
    ``work[j] = sum_k cols[k] * U[k][j]``.  Columns of ``U`` at positions
    where ``work`` is the zero column form a kernel basis.
    """
    m = len(cols)
    work = [list(c) for c in cols]
    umat = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def _combine(ja, jb):
        # Replace columns ja, jb so that ja carries gcd at the pivot row and
        # jb gets zero there; mirrored on the transform columns.
        a, b = work[ja][row], work[jb][row]
        g, u, v = _egcd(a, b)
        ca, cb = work[ja], work[jb]
        ua = [umat[i][ja] for i in range(m)]
        ub = [umat[i][jb] for i in range(m)]
        p, q = a // g, b // g
        new_a = [u * ca[i] + v * cb[i] for i in range(n)]
        new_b = [p * cb[i] - q * ca[i] for i in range(n)]
        work[ja], work[jb] = new_a, new_b
        for i in range(m):
            umat[i][ja] = u * ua[i] + v * ub[i]
            umat[i][jb] = p * ub[i] - q * ua[i]

    active = list(range(m))
    pivots: list[int | None] = [None] * n
    for row in range(n - 1, -1, -1):
        pool = [j for j in active if work[j][row] != 0]
        while len(pool) > 1:
            _combine(pool[0], pool[1])
            pool = [j for j in pool if work[j][row] != 0]
        if pool:
            p = pool[0]
            if work[p][row] < 0:
                work[p] = [-x for x in work[p]]
                for i in range(m):
                    umat[i][p] = -umat[i][p]
            pivots[row] = p
            active.remove(p)

    # Reduce above-pivot entries, deepest pivot first.
    for row in range(n - 1, -1, -1):
        p = pivots[row]
        if p is None:
            continue
        d = work[p][row]
        for s in range(row + 1, n):
            q = pivots[s]
            if q is None:
                continue
            k = work[q][row] // d
            if k:
                work[q] = [x - k * y for x, y in zip(work[q], work[p])]
                for i in range(m):
                    umat[i][q] -= k * umat[i][p]
    return pivots, work, umat


def column_hnf(cols, n: int):
    """Full-rank column HNF as a tuple of row tuples, or None if rank < n."""
    pivots, work, _ = column_hnf_transform(cols, n)
    if any(p is None for p in pivots):
        return None
    return tuple(tuple(work[pivots[j]][i] for j in range(n)) for i in range(n))


def integer_kernel(rows, ncols: int):
    """Basis of the integer kernel of the matrix given as a list of rows."""
    nr = len(rows)
    cols = [tuple(rows[i][j] for i in range(nr)) for j in range(ncols)]
    _, work, umat = column_hnf_transform(cols, nr)
    basis = []
    for j in range(ncols):
        if all(x == 0 for x in work[j]):
            basis.append(tuple(umat[i][j] for i in range(ncols)))
    return basis


def hnf_solve(hnf_rows, target):
    """Solve H z = target over Z for upper-triangular H; None if no solution."""
    n = len(hnf_rows)
    rem = list(target)
    z = [0] * n
    for j in range(n - 1, -1, -1):
        d = hnf_rows[j][j]
        if rem[j] % d:
            return None
        z[j] = rem[j] // d
        if z[j]:
            for i in range(j + 1):
                rem[i] -= z[j] * hnf_rows[i][j]
    if any(rem):
        return None
    return tuple(z)


def solve_fraction(mat, rhs):
    """Solve a square linear system exactly over the rationals.

    Returns a tuple of Fractions, or None if the matrix is singular.
    """
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def invert_fraction(mat):
    """Exact inverse of a square Fraction/int matrix; None if singular."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(a[i][n + j] for j in range(n)) for i in range(n))
