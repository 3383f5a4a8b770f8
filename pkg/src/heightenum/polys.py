"""Polynomial utilities: exact arithmetic over Q and Z, Sturm counts,
discriminants, irreducibility tests, and factorization over prime fields.

Polynomials are coefficient tuples, constant term first.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt

from .errors import ValidationError


def degree(p) -> int:
    d = len(p) - 1
    while d >= 0 and p[d] == 0:
        d -= 1
    return d


def trim(p):
    d = degree(p)
    return tuple(p[: d + 1]) if d >= 0 else (0,)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_add(a, b):
    n = max(len(a), len(b))
    return trim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(tuple(out))


def poly_scale(a, c):
    return trim(tuple(c * x for x in a))


def poly_derivative(p):
    return trim(tuple(i * p[i] for i in range(1, len(p)))) if len(p) > 1 else (0,)


def poly_divmod(a, b):
    """Division with remainder over the rationals."""
    a = [Fraction(x) for x in a]
    db, dd = degree(b), degree(a)
    if db < 0:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(dd - db + 1, 1)
    lead = Fraction(b[db])
    while dd >= db:
        c = a[dd] / lead
        q[dd - db] = c
        for i in range(db + 1):
            a[dd - db + i] -= c * b[i]
        while dd >= 0 and a[dd] == 0:
            dd -= 1
    return trim(tuple(q)), trim(tuple(a))


def sturm_real_root_count(p) -> int:
    """Number of distinct real roots of a squarefree rational polynomial."""
    chain = [trim(tuple(Fraction(c) for c in p)), poly_derivative(p)]
    while degree(chain[-1]) > 0:
        _, r = poly_divmod(chain[-2], chain[-1])
        if degree(r) < 0 or all(c == 0 for c in r):
            break
        chain.append(poly_scale(r, -1))

    def signs_at_inf(sgn):
        out = []
        for q in chain:
            d = degree(q)
            lead = q[d]
            s = lead if sgn > 0 or d % 2 == 0 else -lead
            out.append(1 if s > 0 else (-1 if s < 0 else 0))
        return out

    def variations(seq):
        seq = [s for s in seq if s]
        return sum(1 for a, b in zip(seq, seq[1:]) if a * b < 0)

    return variations(signs_at_inf(-1)) - variations(signs_at_inf(1))


def resultant(a, b) -> Fraction:
    """Resultant via the Sylvester determinant (exact)."""
    from .intmat import det_fraction

    da, db = degree(a), degree(b)
    if da < 0 or db < 0:
        return Fraction(0)
    size = da + db
    rows = []
    for i in range(db):
        row = [Fraction(0)] * size
        for j in range(da + 1):
            row[i + j] = Fraction(a[da - j])
        rows.append(tuple(row))
    for i in range(da):
        row = [Fraction(0)] * size
        for j in range(db + 1):
            row[i + j] = Fraction(b[db - j])
        rows.append(tuple(row))
    return det_fraction(tuple(rows))


def poly_discriminant(p) -> Fraction:
    n = degree(p)
    res = resultant(p, poly_derivative(p))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / Fraction(p[n])


# ---------------------------------------------------------------------------
# Arithmetic over F_p.  Polynomials are tuples of ints in [0, p).

def _pmod(a, p):
    return trim(tuple(c % p for c in a))


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return trim(tuple(out))


def _pdivmod(a, b, p):
    a = list(a)
    db, da = degree(b), degree(a)
    inv = pow(b[db], -1, p)
    q = [0] * max(da - db + 1, 1)
    while da >= db:
        c = a[da] * inv % p
        q[da - db] = c
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        while da >= 0 and a[da] == 0:
            da -= 1
    return trim(tuple(q)), trim(tuple(x % p for x in a))


def _pgcd(a, b, p):
    a, b = _pmod(a, p), _pmod(b, p)
    while degree(b) >= 0 and any(b):
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    d = degree(a)
    if d < 0:
        return (0,)
    inv = pow(a[d], -1, p)
    return trim(tuple(c * inv % p for c in a))


def _ppow_mod(base, e, mod, p):
    result = (1,)
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def factor_mod_p(poly, p):
    """Factor a monic integer polynomial over F_p.

    Returns a list of (factor, multiplicity) with monic irreducible factors.
    Degrees involved here are tiny, so squarefree/distinct-degree splitting
    plus seeded Cantor-Zassenhaus is plenty.
    """
    f = _pmod(poly, p)
    d = degree(f)
    inv = pow(f[d], -1, p)
    f = trim(tuple(c * inv % p for c in f))
    out = []

    def _squarefree_parts(g, mult=1):
        # (squarefree factor, multiplicity) pairs; char-p Yun decomposition.
        parts = []
        if degree(g) <= 0:
            return parts
        gp = _pmod(poly_derivative(g), p)
        if all(c == 0 for c in gp):
            # g = h(x^p) = h(x)^p over the prime field
            h = trim(tuple(g[i] for i in range(0, len(g), p)))
            return _squarefree_parts(h, mult * p)
        c = _pgcd(g, gp, p)
        w = _pdivmod(g, c, p)[0]
        i = 1
        while degree(w) > 0:
            y = _pgcd(w, c, p)
            fac = _pdivmod(w, y, p)[0]
            if degree(fac) > 0:
                parts.append((fac, i * mult))
            w = y
            c = _pdivmod(c, y, p)[0]
            i += 1
        if degree(c) > 0:
            parts.extend(_squarefree_parts(c, mult))
        return parts

    def _distinct_degree(g):
        blocks = []
        h = (0, 1)
        k = 0
        rest = g
        while degree(rest) >= 1:
            k += 1
            if 2 * k > degree(rest):
                blocks.append((rest, degree(rest)))
                break
            h = _ppow_mod(h, p, rest, p)
            sub = poly_add(h, (0, p - 1))
            d0 = _pgcd(rest, sub, p)
            if degree(d0) > 0:
                blocks.append((d0, k))
                rest = _pdivmod(rest, d0, p)[0]
                h = _pdivmod(h, rest, p)[1]
        return blocks

    def _equal_degree(g, k):
        n = degree(g)
        if n == k:
            return [g]
        rng = random.Random(p * 1315423911 + n * 2654435761 + k)
        found = []
        stack = [g]
        while stack:
            cur = stack.pop()
            if degree(cur) == k:
                found.append(cur)
                continue
            while True:
                r = trim(tuple(rng.randrange(p) for _ in range(degree(cur))) + (1,))
                if degree(r) < 1:
                    continue
                if p == 2:
                    # trace map splitting
                    t = r
                    acc = r
                    for _ in range(k - 1):
                        t = _ppow_mod(t, 2, cur, 2)
                        acc = poly_add(acc, t)
                        acc = _pdivmod(acc, cur, 2)[1]
                    cand = _pgcd(cur, acc, 2)
                else:
                    e = (p**k - 1) // 2
                    t = _ppow_mod(r, e, cur, p)
                    cand = _pgcd(cur, poly_add(t, (p - 1,)), p)
                if 0 < degree(cand) < degree(cur):
                    stack.append(cand)
                    stack.append(_pdivmod(cur, cand, p)[0])
                    break
        return found

    for sqfree, mult in _squarefree_parts(f):
        for block, k in _distinct_degree(sqfree):
            for irr in _equal_degree(block, k):
                out.append((irr, mult))
    out.sort()
    return out


def roots_mod_p(poly, p):
    return [r for r in range(p) if poly_eval(poly, r) % p == 0]


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if n < 0:
        return (-1 if a < 0 else 1) * kronecker(a, -n)
    t = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            t = -t
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def primes_up_to(n: int):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def check_irreducible(poly) -> bool:
    """Irreducibility over Q for monic integer polynomials of degree <= 4.

    A mod-p irreducibility certificate is tried first; degree <= 4 inputs fall
    back to exhaustive rational-root / quadratic-factor search.
    """
    p = trim(poly)
    n = degree(p)
    if n <= 0:
        return False
    if n == 1:
        return True
    for q in primes_up_to(60):
        if p[n] % q == 0:
            continue
        facs = factor_mod_p(p, q)
        if len(facs) == 1 and facs[0][1] == 1:
            return True
    # rational roots: candidates divide the constant term
    c0 = p[0]
    if c0 == 0:
        return False
    divs = set()
    d = 1
    while d * d <= abs(c0):
        if c0 % d == 0:
            divs.update({d, -d, abs(c0) // d, -(abs(c0) // d)})
        d += 1
    if any(poly_eval(p, r) == 0 for r in divs):
        return False
    if n <= 3:
        return True
    if n == 4:
        # monic quartic: search integer factorizations (x^2+ax+b)(x^2+cx+d)
        e, c1, c2, c3 = p[0], p[1], p[2], p[3]
        bd_pairs = [(b, e // b) for b in divs if e % b == 0]
        for b, dd in bd_pairs:
            if dd != b:
                # a+c = c3 ; ad+bc = c1  =>  linear system in (a, c)
                det = dd - b
                num_a = c1 - b * c3
                if num_a % det:
                    continue
                a = num_a // det
                c = c3 - a
                if b + dd + a * c == c2:
                    return False
            else:
                if b * c3 != c1:
                    continue
                # a+c = c3, ac = c2 - 2b with integer roots
                disc = c3 * c3 - 4 * (c2 - 2 * b)
                if disc >= 0 and isqrt(disc) ** 2 == disc and (c3 + isqrt(disc)) % 2 == 0:
                    return False
        return True
    raise ValidationError(f"cannot verify irreducibility in degree {n}")
