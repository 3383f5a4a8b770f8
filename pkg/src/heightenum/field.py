"""Number fields and exact element arithmetic over an integral basis.

A field is described by a monic irreducible integer polynomial f and an
integral basis given in the power basis of a root.  Elements store exact
rational coordinate vectors over the integral basis; products go through a
precomputed integer structure-constant table, so arithmetic on algebraic
integers never leaves Z.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import polys
from .errors import ValidationError
from .intmat import det_bareiss, det_fraction, invert_fraction, solve_fraction


def _norm_coord(x):
    """Collapse whole Fractions to ints so equal elements hash equally fast."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    return x


class NumberField:
    """Immutable description of a number field K of degree n.

    Unit and class data are attached by the constructors in
    :mod:`heightenum.descriptor`; arithmetic only needs the polynomial and the
    integral basis.
    """

    def __init__(self, poly, integral_basis=None):
        poly = polys.trim(tuple(int(c) for c in poly))
        n = polys.degree(poly)
        if n < 1:
            raise ValidationError("defining polynomial must be nonconstant")
        if poly[n] != 1:
            raise ValidationError("defining polynomial must be monic")
        if not polys.check_irreducible(poly):
            raise ValidationError("defining polynomial is reducible")
        self.poly = poly
        self.n = n
        if integral_basis is None:
            basis = tuple(tuple(Fraction(1 if i == j else 0) for i in range(n)) for j in range(n))
        else:
            basis = tuple(tuple(Fraction(x) for x in col) for col in integral_basis)
        if len(basis) != n or any(len(c) != n for c in basis):
            raise ValidationError("integral basis must be a square matrix of size n")
        # basis[j] = power-basis coordinates of omega_j
        if basis[0] != tuple(Fraction(1 if i == 0 else 0) for i in range(n)):
            raise ValidationError("first basis element must be 1")
        self.basis = basis
        basis_rows = tuple(tuple(basis[j][i] for j in range(n)) for i in range(n))
        inv = invert_fraction(basis_rows)
        if inv is None:
            raise ValidationError("integral basis matrix is singular")
        self._power_to_basis = inv  # rows; maps power coords -> basis coords
        self.mult_table = self._build_mult_table()
        self.discriminant = self._basis_discriminant()
        self.r1 = polys.sturm_real_root_count(poly)
        if (n - self.r1) % 2:
            raise ValidationError("inconsistent real root count")
        self.r2 = (n - self.r1) // 2
        self.unit_rank = self.r1 + self.r2 - 1
        # filled in by descriptor-level constructors
        self.roots_of_unity: list[FieldElement] = []
        self.torsion_order = 2
        self.fundamental_units: list[FieldElement] = []
        self.class_data = None
        self.automorphisms = None  # list of n x n Fraction matrices (basis coords)
        self.conj_matrix = None  # automorphism acting as conjugation at every place
        self.label = None
        self._caches: dict = {}

    # -- construction helpers -------------------------------------------------

    def _power_poly_of_basis(self, j):
        return polys.trim(self.basis[j])

    def _reduce_power_poly(self, p):
        """Reduce a power-basis polynomial mod f and convert to basis coords."""
        f = self.poly
        n = self.n
        p = [Fraction(c) for c in p]
        for d in range(len(p) - 1, n - 1, -1):
            c = p[d]
            if c:
                for i in range(n):
                    p[d - n + i] -= c * f[i]
            p.pop()
        while len(p) < n:
            p.append(Fraction(0))
        return tuple(
            sum(self._power_to_basis[i][k] * p[k] for k in range(n)) for i in range(n)
        )

    def _build_mult_table(self):
        n = self.n
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                prod = polys.poly_mul(self._power_poly_of_basis(i), self._power_poly_of_basis(j))
                coords = self._reduce_power_poly(prod)
                ints = []
                for c in coords:
                    if c.denominator != 1:
                        raise ValidationError("integral basis not closed under multiplication")
                    ints.append(int(c))
                row.append(tuple(ints))
            table.append(tuple(row))
        return tuple(table)

    def _basis_discriminant(self):
        n = self.n
        # trace form: Tr(omega_i * omega_j)
        traces = []
        for i in range(n):
            row = []
            for j in range(n):
                prod = self.mult_coords(
                    tuple(1 if k == i else 0 for k in range(n)),
                    tuple(1 if k == j else 0 for k in range(n)),
                )
                row.append(self.trace_coords(prod))
            traces.append(tuple(row))
        d = det_fraction(tuple(traces))
        if d.denominator != 1 or d == 0:
            raise ValidationError("degenerate trace form")
        return int(d)

    # -- raw coordinate arithmetic (hot paths work on tuples) ----------------

    def mult_coords(self, a, b):
        n = self.n
        table = self.mult_table
        out = [0] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            ti = table[i]
            for j in range(n):
                bj = b[j]
                if not bj:
                    continue
                v = ai * bj
                tij = ti[j]
                for k in range(n):
                    if tij[k]:
                        out[k] += v * tij[k]
        return tuple(out)

    def mult_matrix(self, coords):
        """Matrix of multiplication by the element, acting on basis coords."""
        n = self.n
        cols = [self.mult_coords(coords, tuple(1 if k == j else 0 for k in range(n)))
                for j in range(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def norm_coords(self, coords):
        den = 1
        for c in coords:
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        if den == 1:
            return det_bareiss(self.mult_matrix(tuple(int(c) for c in coords)))
        scaled = tuple(int(c * den) for c in coords)
        return Fraction(det_bareiss(self.mult_matrix(scaled)), den**self.n)

    def trace_coords(self, coords):
        m = self.mult_matrix(coords)
        return sum(m[i][i] for i in range(self.n))

    # -- elements -------------------------------------------------------------

    def element(self, coords) -> "FieldElement":
        if len(coords) != self.n:
            raise ValidationError("coordinate vector has wrong length")
        return FieldElement(self, tuple(_norm_coord(Fraction(c) if not isinstance(c, (int, Fraction)) else c) for c in coords))

    @property
    def zero(self) -> "FieldElement":
        return self.element((0,) * self.n)

    @property
    def one(self) -> "FieldElement":
        return self.element((1,) + (0,) * (self.n - 1))

    @property
    def gen(self) -> "FieldElement":
        """Root of the defining polynomial, expressed over the integral basis."""
        power = tuple(Fraction(1 if i == 1 else 0) for i in range(self.n)) if self.n > 1 else (Fraction(self.poly[0]) * -1,)
        if self.n == 1:
            return self.element((-Fraction(self.poly[0]),))
        coords = tuple(
            sum(self._power_to_basis[i][k] * power[k] for k in range(self.n))
            for i in range(self.n)
        )
        return self.element(coords)

    def from_power_coords(self, coords) -> "FieldElement":
        coords = tuple(Fraction(c) for c in coords)
        basis_coords = tuple(
            sum(self._power_to_basis[i][k] * coords[k] for k in range(self.n))
            for i in range(self.n)
        )
        return self.element(basis_coords)

    @property
    def signature(self):
        return (self.r1, self.r2)

    @property
    def class_number(self):
        return len(self.class_data.representatives) if self.class_data else None

    def __repr__(self):
        name = self.label or f"poly={list(self.poly)}"
        return f"NumberField({name}, n={self.n}, disc={self.discriminant})"


class FieldElement:
    """Element of K as an exact coordinate vector over the integral basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = coords

    def __add__(self, other):
        return FieldElement(self.field, tuple(_norm_coord(a + b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return FieldElement(self.field, tuple(_norm_coord(a - b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return FieldElement(self.field, tuple(_norm_coord(c) for c in self.field.mult_coords(self.coords, other.coords)))
        return FieldElement(self.field, tuple(_norm_coord(a * other) for a in self.coords))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        m = self.field.mult_matrix(self.coords)
        one = (1,) + (0,) * (self.field.n - 1)
        sol = solve_fraction(m, one)
        return FieldElement(self.field, tuple(_norm_coord(x) for x in sol))

    def __truediv__(self, other):
        if isinstance(other, FieldElement):
            return self * other.inverse()
        return FieldElement(self.field, tuple(_norm_coord(Fraction(a, 1) / other) for a in self.coords))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def norm(self):
        return self.field.norm_coords(self.coords)

    def trace(self):
        return self.field.trace_coords(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(not isinstance(c, Fraction) or c.denominator == 1 for c in self.coords)

    def int_coords(self):
        return tuple(int(c) for c in self.coords)

    def denominator_lcm(self) -> int:
        den = 1
        for c in self.coords:
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        return den

    def apply_matrix(self, rows) -> "FieldElement":
        """Image under a Q-linear map given by rows over the integral basis."""
        n = self.field.n
        out = tuple(sum(rows[i][j] * self.coords[j] for j in range(n)) for i in range(n))
        return FieldElement(self.field, tuple(_norm_coord(Fraction(x)) for x in out))

    def __eq__(self, other):
        return isinstance(other, FieldElement) and self.coords == other.coords and self.field is other.field

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"FieldElement{self.coords}"
