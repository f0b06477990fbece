"""Affine points and plane curves of degree at most three."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from cubiclab.errors import InvalidInputError
from cubiclab.field import FpElement, PrimeModulus

# Exponents (i, j) of x^i * y^j in coefficient order:
# 1, x, y, x^2, xy, y^2, x^3, x^2y, xy^2, y^3
MONOMIALS: tuple[tuple[int, int], ...] = (
    (0, 0),
    (1, 0),
    (0, 1),
    (2, 0),
    (1, 1),
    (0, 2),
    (3, 0),
    (2, 1),
    (1, 2),
    (0, 3),
)
MONOMIAL_INDEX: dict[tuple[int, int], int] = {m: index for index, m in enumerate(MONOMIALS)}
NUM_MONOMIALS = len(MONOMIALS)

CURVE_CSV_HEADER = tuple(f"c{i}{j}" for i, j in MONOMIALS)
POINT_CSV_HEADER = ("x", "y")


class IrreducibilityClass(Enum):
    """Classification of a curve over the algebraic closure of GF(p).

    Values:
        REDUCIBLE_RATIONAL: A linear factor over GF(p) divides the homogenization
        CONJUGATE_LINES: Three Galois-conjugate lines defined over GF(p^3)
        ABSOLUTELY_IRREDUCIBLE: Irreducible over every extension
        LOW_DEGREE: Degree at most two
    """

    REDUCIBLE_RATIONAL = "ReducibleRational"
    CONJUGATE_LINES = "ConjugateLines"
    ABSOLUTELY_IRREDUCIBLE = "AbsolutelyIrreducible"
    LOW_DEGREE = "LowDegree"


class RationalClass(Enum):
    """Classification of a curve over GF(p) itself."""

    REDUCIBLE = "Reducible"
    IRREDUCIBLE = "Irreducible"
    LOW_DEGREE = "LowDegree"


@dataclass(frozen=True)
class AffinePoint:
    """A point of the affine plane over GF(p).

    Attributes:
        x: First coordinate, a residue in [0, p)
        y: Second coordinate, a residue in [0, p)
        modulus: The field the coordinates live in
    """

    x: int
    y: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        p = self.modulus.p
        if not (0 <= self.x < p and 0 <= self.y < p):
            raise InvalidInputError(f"({self.x}, {self.y}) not reduced modulo {p}")

    @classmethod
    def of(cls, x: int, y: int, modulus: PrimeModulus) -> "AffinePoint":
        """Build a point from arbitrary integers, reducing them modulo p."""
        return cls(x % modulus.p, y % modulus.p, modulus)

    @property
    def key(self) -> tuple[int, int]:
        return (self.x, self.y)

    @property
    def coordinates(self) -> tuple[FpElement, FpElement]:
        return (self.modulus.element(self.x), self.modulus.element(self.y))

    @cached_property
    def monomials(self) -> tuple[int, ...]:
        """Values of the ten monomials at this point, in coefficient order."""
        return monomial_values(self.x, self.y, self.modulus.p)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def monomial_values(x: int, y: int, p: int) -> tuple[int, ...]:
    """Evaluate every monomial x^i * y^j at (x, y) modulo p."""
    x2, y2 = x * x % p, y * y % p
    xy = x * y % p
    return (
        1 % p,
        x % p,
        y % p,
        x2,
        xy,
        y2,
        x2 * x % p,
        x2 * y % p,
        x * y2 % p,
        y2 * y % p,
    )


@dataclass(frozen=True)
class CurveCoeffs:
    """A nonzero affine curve sum c_ij x^i y^j = 0 with i + j <= 3.

    The stored vector is the projective representative whose first nonzero
    entry is 1, so scalar multiples of a curve compare equal.

    Attributes:
        values: Ten residues in coefficient order
        modulus: The field the coefficients live in
    """

    values: tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        if len(self.values) != NUM_MONOMIALS:
            raise InvalidInputError(
                f"expected {NUM_MONOMIALS} coefficients, got {len(self.values)}"
            )

        p = self.modulus.p
        reduced = [int(c) % p for c in self.values]
        lead = next((c for c in reduced if c), 0)
        if lead == 0:
            raise InvalidInputError("the zero vector is not a curve")

        scale = self.modulus.inv(lead)
        object.__setattr__(self, "values", tuple(c * scale % p for c in reduced))

    @classmethod
    def from_monomials(
        cls, terms: dict[tuple[int, int], int], modulus: PrimeModulus
    ) -> "CurveCoeffs":
        """Build a curve from a {(i, j): coefficient} mapping.

        Raises:
            InvalidInputError: If a monomial has total degree above three
        """
        values = [0] * NUM_MONOMIALS
        for monomial, coefficient in terms.items():
            if monomial not in MONOMIAL_INDEX:
                raise InvalidInputError(f"x^{monomial[0]} y^{monomial[1]} exceeds degree 3")
            values[MONOMIAL_INDEX[monomial]] += coefficient
        return cls(tuple(values), modulus)

    def coeff(self, i: int, j: int) -> int:
        """Coefficient of x^i * y^j."""
        return self.values[MONOMIAL_INDEX[(i, j)]]

    def terms(self) -> dict[tuple[int, int], int]:
        """Nonzero coefficients keyed by exponent pair."""
        return {m: c for m, c in zip(MONOMIALS, self.values, strict=True) if c}

    @property
    def coefficients(self) -> tuple[FpElement, ...]:
        return tuple(self.modulus.element(c) for c in self.values)

    @cached_property
    def degree(self) -> int:
        return max(i + j for (i, j), c in zip(MONOMIALS, self.values, strict=True) if c)

    @cached_property
    def classification(self) -> IrreducibilityClass:
        """Irreducibility over the algebraic closure (computed once)."""
        from cubiclab.curves.classify import classify_irreducibility

        return classify_irreducibility(self)

    @cached_property
    def rational_classification(self) -> RationalClass:
        """Irreducibility over GF(p) (computed once)."""
        from cubiclab.curves.classify import classify_rational

        return classify_rational(self)

    @property
    def is_irreducible_cubic(self) -> bool:
        if self.degree != 3:
            return False
        return self.classification is IrreducibilityClass.ABSOLUTELY_IRREDUCIBLE

    def __str__(self) -> str:
        parts = []
        for (i, j), c in self.terms().items():
            monomial = "*".join(
                part
                for part in (
                    "x" if i == 1 else f"x^{i}" if i else "",
                    "y" if j == 1 else f"y^{j}" if j else "",
                )
                if part
            )
            if not monomial:
                parts.append(str(c))
            elif c == 1:
                parts.append(monomial)
            else:
                parts.append(f"{c}*{monomial}")
        return " + ".join(parts) + f" over GF({self.modulus.p})"
