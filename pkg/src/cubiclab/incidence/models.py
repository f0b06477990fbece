"""Point sets, curve sets and richness classes."""

from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from cubiclab.curves import AffinePoint, CurveCoeffs
from cubiclab.errors import InvalidInputError, ModulusMismatchError
from cubiclab.field import PrimeModulus

# int64 holds every product of two residues below this bound
_INT64_SAFE_MODULUS = 3037000499


def residue_dtype(p: int) -> type | np.dtype:
    """Array dtype able to hold a product of two residues modulo p exactly."""
    return np.dtype(np.int64) if p <= _INT64_SAFE_MODULUS else object


@dataclass(frozen=True)
class PointSet:
    """A duplicate-free set of affine points over one field, with cached monomials.

    Attributes:
        points: The points in insertion order
        modulus: The field every point lives over
    """

    points: tuple[AffinePoint, ...]
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        for q in self.points:
            if q.modulus.p != self.modulus.p:
                raise ModulusMismatchError(
                    f"{q} is over GF({q.modulus.p}), not GF({self.modulus.p})"
                )
        if len(set(self.points)) != len(self.points):
            raise InvalidInputError("point set contains duplicate points")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[AffinePoint]:
        return iter(self.points)

    def __getitem__(self, index: int) -> AffinePoint:
        return self.points[index]

    def __contains__(self, q: object) -> bool:
        return q in self.index

    @cached_property
    def index(self) -> dict[AffinePoint, int]:
        return {q: i for i, q in enumerate(self.points)}

    @cached_property
    def monomials(self) -> np.ndarray:
        """N x 10 array of monomial values, one row per point."""
        dtype = residue_dtype(self.modulus.p)
        if not self.points:
            return np.zeros((0, 10), dtype=dtype)
        return np.array([q.monomials for q in self.points], dtype=dtype)


@dataclass(frozen=True)
class CurveSet:
    """A duplicate-free set of curves over one field.

    Attributes:
        curves: Normalized curves in insertion order
        modulus: The field every curve lives over
        irreducible: Every member is a degree-3 AbsolutelyIrreducible curve (verified)
    """

    curves: tuple[CurveCoeffs, ...]
    modulus: PrimeModulus
    irreducible: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "curves", tuple(self.curves))
        for curve in self.curves:
            if curve.modulus.p != self.modulus.p:
                raise ModulusMismatchError(
                    f"curve over GF({curve.modulus.p}) in a set over GF({self.modulus.p})"
                )
        if len(set(self.curves)) != len(self.curves):
            raise InvalidInputError("curve set contains duplicate curves")
        if self.irreducible:
            failing = [i for i, curve in enumerate(self.curves) if not curve.is_irreducible_cubic]
            if failing:
                raise InvalidInputError(
                    f"curves {failing[:5]} are not absolutely irreducible cubics"
                )

    def __len__(self) -> int:
        return len(self.curves)

    def __iter__(self) -> Iterator[CurveCoeffs]:
        return iter(self.curves)

    def __getitem__(self, index: int) -> CurveCoeffs:
        return self.curves[index]

    @cached_property
    def coefficients(self) -> np.ndarray:
        """M x 10 array of normalized coefficients, one row per curve."""
        dtype = residue_dtype(self.modulus.p)
        if not self.curves:
            return np.zeros((0, 10), dtype=dtype)
        return np.array([curve.values for curve in self.curves], dtype=dtype)


@dataclass(frozen=True)
class RichnessClass:
    """The k-rich curves C_k: those with k <= |curve cap P| < 2k.

    Attributes:
        k: Richness threshold
        members: Indices of member curves in the CurveSet
        counts: |curve cap P| for each member, aligned with members
        points: The point set richness is measured against
        curves: The curve set the indices refer to
    """

    k: int
    members: tuple[int, ...]
    counts: tuple[int, ...]
    points: PointSet = field(repr=False, compare=False)
    curves: CurveSet = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def member_curves(self) -> list[CurveCoeffs]:
        return [self.curves[i] for i in self.members]
