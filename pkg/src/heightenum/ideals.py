"""Ideals of the ring of integers in Hermite normal form.

An integral ideal is stored as an upper-triangular integer matrix whose
columns are a Z-basis over the integral basis of the field; a fractional
ideal carries an extra positive denominator d and represents (1/d) times the
stored module.  Equality and norms are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ZeroIdeal
from .field import FieldElement, NumberField
from .intmat import column_hnf, hnf_solve, integer_kernel


class Ideal:
    __slots__ = ("field", "hnf", "denominator", "norm")

    def __init__(self, field: NumberField, hnf_rows, denominator: int = 1):
        if denominator < 1:
            raise ValueError("denominator must be positive")
        # normalize out common content between matrix and denominator
        if denominator > 1:
            g = denominator
            for row in hnf_rows:
                for x in row:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                hnf_rows = tuple(tuple(x // g for x in row) for row in hnf_rows)
                denominator //= g
        self.field = field
        self.hnf = tuple(tuple(row) for row in hnf_rows)
        self.denominator = denominator
        n = field.n
        prod = 1
        for i in range(n):
            prod *= self.hnf[i][i]
        self.norm = prod if denominator == 1 else Fraction(prod, denominator**n)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def unit_ideal(cls, field: NumberField) -> "Ideal":
        n = field.n
        return cls(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_generators(cls, field: NumberField, gens) -> "Ideal":
        """O_K-module generated by the given integral elements."""
        gens = [g if isinstance(g, FieldElement) else field.element(g) for g in gens]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise ZeroIdeal("all generators are zero")
        den = 1
        for g in gens:
            d = g.denominator_lcm()
            den = den * d // gcd(den, d)
        n = field.n
        cols = []
        for g in gens:
            coords = tuple(int(c * den) for c in (Fraction(x) for x in g.coords))
            for j in range(n):
                basis_vec = tuple(1 if k == j else 0 for k in range(n))
                cols.append(field.mult_coords(coords, basis_vec))
        h = column_hnf(cols, n)
        if h is None:
            raise ZeroIdeal("generators span a rank-deficient module")
        return cls(field, h, den)

    @classmethod
    def principal(cls, x: FieldElement) -> "Ideal":
        return cls.from_generators(x.field, [x])

    # -- basic queries ----------------------------------------------------

    def is_integral(self) -> bool:
        return self.denominator == 1

    def basis_elements(self):
        n = self.field.n
        cols = []
        for j in range(n):
            coords = tuple(Fraction(self.hnf[i][j], self.denominator) for i in range(n))
            cols.append(self.field.element(coords))
        return cols

    def contains(self, x: FieldElement) -> bool:
        # x in (1/d) M  <=>  d*x in M, so d*x must have integer coordinates
        target = []
        for c in x.coords:
            v = Fraction(c) * self.denominator
            if v.denominator != 1:
                return False
            target.append(int(v))
        return hnf_solve(self.hnf, tuple(target)) is not None

    def membership_key(self):
        return (self.hnf, self.denominator)

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.hnf == other.hnf
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash((self.hnf, self.denominator))

    def __repr__(self):
        d = f", den={self.denominator}" if self.denominator != 1 else ""
        return f"Ideal(hnf={self.hnf}{d})"

    # -- arithmetic -------------------------------------------------------

    def __mul__(self, other: "Ideal") -> "Ideal":
        field = self.field
        n = field.n
        cols = []
        a_cols = [tuple(self.hnf[i][j] for i in range(n)) for j in range(n)]
        b_cols = [tuple(other.hnf[i][j] for i in range(n)) for j in range(n)]
        for a in a_cols:
            for b in b_cols:
                cols.append(field.mult_coords(a, b))
        h = column_hnf(cols, n)
        if h is None:
            raise ZeroIdeal("product collapsed")
        return Ideal(field, h, self.denominator * other.denominator)

    def inverse(self) -> "Ideal":
        """Fractional inverse: the module of x with x * self inside O_K."""
        field = self.field
        n = field.n
        if self.denominator != 1:
            num = Ideal(field, self.hnf)
            inv = num.inverse()
            return Ideal(field, tuple(tuple(v * self.denominator for v in row) for row in inv.hnf),
                         inv.denominator)
        nrm = int(self.norm)
        if nrm == 0:
            raise ZeroIdeal("zero ideal has no inverse")
        # u/N(a) * alpha_j integral for all j  <=>  M_j u = 0 mod N(a)
        stacked = []
        for j in range(n):
            col = tuple(self.hnf[i][j] for i in range(n))
            stacked.extend(field.mult_matrix(col))
        n2 = len(stacked)
        rows = [tuple(row) + tuple(nrm if k == i else 0 for k in range(n2))
                for i, row in enumerate(stacked)]
        kernel = integer_kernel(rows, n + n2)
        cols = [k[:n] for k in kernel]
        h = column_hnf(cols, n)
        if h is None:
            raise ZeroIdeal("inverse computation failed")
        return Ideal(field, h, nrm)

    def scaled_integral(self) -> "Ideal":
        """Multiply a fractional ideal by its denominator to land in O_K."""
        return Ideal(self.field, self.hnf)

    def apply_matrix(self, rows) -> "Ideal":
        """Image ideal under a ring automorphism given over the integral basis."""
        field = self.field
        n = field.n
        cols = []
        for j in range(n):
            col = tuple(Fraction(self.hnf[i][j]) for i in range(n))
            img = tuple(sum(rows[i][k] * col[k] for k in range(n)) for i in range(n))
            cols.append(tuple(int(x) for x in img))
        h = column_hnf(cols, n)
        return Ideal(field, h, self.denominator)


def ideal_from_generators(field: NumberField, gens) -> Ideal:
    return Ideal.from_generators(field, gens)


def ideal_equals(a: Ideal, b: Ideal) -> bool:
    return a == b


def ideal_mul(a: Ideal, b: Ideal) -> Ideal:
    return a * b


def ideal_inverse(a: Ideal) -> Ideal:
    return a.inverse()
