"""Exception types shared across the package."""


class HeightEnumError(Exception):
    """Base class for all library errors."""


class ParseError(HeightEnumError):
    """Malformed field descriptor document."""


class ValidationError(HeightEnumError):
    """Descriptor data fails an exact consistency check."""


class IncompleteError(HeightEnumError):
    """Descriptor omits data that cannot be computed automatically."""


class InvalidDiscriminant(HeightEnumError):
    """Quadratic field constructor called with a non-squarefree or trivial d."""


class ZeroIdeal(HeightEnumError):
    """Ideal operation received the zero module."""


class ZeroElement(HeightEnumError):
    """Operation undefined at zero (logs, inverses)."""


class UnsupportedDegree(HeightEnumError):
    """Built-in class group search does not cover this field; supply class data."""


class PrecisionExhausted(HeightEnumError):
    """Roots could not be certified / separated within the precision cap."""


class RankDeficient(HeightEnumError):
    """Lattice basis reduction received dependent vectors."""


class NotUnits(HeightEnumError):
    """Supposed unit has norm != +-1."""


class DependentUnits(HeightEnumError):
    """Unit list does not span a full-rank log lattice."""


class Unbounded(HeightEnumError):
    """Polytope enumeration cannot derive finite coordinate bounds."""


class SingularMap(HeightEnumError):
    """Polytope transport through a non-invertible matrix."""


class WrongRank(HeightEnumError):
    """Rank-zero routine called on a field with infinite unit group."""


class ZetaTruncationWarning(UserWarning):
    """Euler product tail estimate exceeds the accuracy target."""
