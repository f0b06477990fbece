"""Objects of the coefficient space P^9 over GF(p) and of its 2-flats."""

from dataclasses import dataclass
from typing import NamedTuple

from cubiclab.curves import AffinePoint, CurveCoeffs
from cubiclab.dual.linalg import Row
from cubiclab.errors import InvalidInputError
from cubiclab.field import PrimeModulus


@dataclass(frozen=True)
class DualPoint:
    """A curve seen as a point of P^9: its normalized coefficient vector.

    Attributes:
        coordinates: Ten residues, first nonzero equal to 1
        modulus: The base field
    """

    coordinates: Row
    modulus: PrimeModulus

    def to_curve(self) -> CurveCoeffs:
        return CurveCoeffs(self.coordinates, self.modulus)


@dataclass(frozen=True)
class Hyperplane:
    """The linear condition sum X_ij * q1^i * q2^j = 0 imposed by a point.

    Attributes:
        covector: Ten residues, first nonzero equal to 1
        modulus: The base field
    """

    covector: Row
    modulus: PrimeModulus


class SolutionSpace(NamedTuple):
    """Rank of a system of point conditions and a canonical basis of its solutions."""

    rank: int
    basis: list[Row]


@dataclass(frozen=True)
class Flat2:
    """The projective plane pi_S cut out by seven independent point conditions.

    Attributes:
        basis: Three basis rows in reduced echelon form
        pivots: Pivot column of each basis row
        points: The seven points defining the flat, sorted by (x, y)
        modulus: The base field
    """

    basis: tuple[Row, Row, Row]
    pivots: tuple[int, int, int]
    points: tuple[AffinePoint, ...]
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if len(self.basis) != 3:
            raise InvalidInputError(f"a 2-flat needs 3 basis rows, got {len(self.basis)}")


@dataclass(frozen=True)
class NotAFlat:
    """Marker: the seven point conditions are dependent, so pi_S is not a 2-flat."""

    rank: int
    points: tuple[AffinePoint, ...]


@dataclass(frozen=True)
class DualLine:
    """The line psi(q) = pi_q cut with pi_S, in the flat's parameter coordinates.

    Attributes:
        covector: Three residues (t0, t1, t2 coefficients), first nonzero equal to 1
        source: The point q the line comes from
    """

    covector: tuple[int, int, int]
    source: AffinePoint


@dataclass(frozen=True)
class Degenerate:
    """Marker: pi_S lies inside pi_q, so psi(q) is the whole flat."""

    source: AffinePoint
