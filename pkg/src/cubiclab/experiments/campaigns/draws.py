"""Random configurations shared by the verification campaigns."""

from collections.abc import Sequence

import numpy as np

from cubiclab.curves import AffinePoint, CurveCoeffs
from cubiclab.dual import SolutionSpace
from cubiclab.errors import InvalidInputError
from cubiclab.field import PrimeModulus


def choose(
    items: Sequence[AffinePoint], count: int, rng: np.random.Generator
) -> list[AffinePoint]:
    """count distinct items drawn uniformly, in draw order."""
    if count > len(items):
        raise InvalidInputError(f"cannot choose {count} of {len(items)} items")
    return [items[int(i)] for i in rng.choice(len(items), size=count, replace=False)]


def collinear_points(
    count: int, modulus: PrimeModulus, rng: np.random.Generator
) -> list[AffinePoint]:
    """count distinct points on a random line through a random base point."""
    p = modulus.p
    if count > p:
        raise InvalidInputError(f"a line over GF({p}) has only {p} affine points")
    x0, y0 = (int(v) for v in rng.integers(0, p, size=2))
    dx, dy = 0, 0
    while dx == 0 and dy == 0:
        dx, dy = (int(v) for v in rng.integers(0, p, size=2))
    steps = rng.choice(p, size=count, replace=False)
    return [
        AffinePoint((x0 + int(s) * dx) % p, (y0 + int(s) * dy) % p, modulus) for s in steps
    ]


def planted_points(
    total: int, collinear: int, modulus: PrimeModulus, rng: np.random.Generator
) -> list[AffinePoint]:
    """total distinct points of which at least `collinear` lie on one line.

    With collinear < 2 the points are plain uniform draws.
    """
    chosen: dict[AffinePoint, None] = {}
    if collinear >= 2:
        chosen.update(dict.fromkeys(collinear_points(collinear, modulus, rng)))
    p = modulus.p
    while len(chosen) < total:
        x, y = (int(v) for v in rng.integers(0, p, size=2))
        chosen.setdefault(AffinePoint(x, y, modulus), None)
    return list(chosen)


def solution_members(
    space: SolutionSpace, modulus: PrimeModulus, count: int, rng: np.random.Generator
) -> list[CurveCoeffs]:
    """Up to count random nonzero members of the span of a solution basis."""
    p = modulus.p
    members: list[CurveCoeffs] = []
    if not space.basis:
        return members
    for _ in range(count):
        weights = [int(w) for w in rng.integers(0, p, size=len(space.basis))]
        if not any(weights):
            continue
        values = tuple(
            sum(w * row[col] for w, row in zip(weights, space.basis, strict=True)) % p
            for col in range(10)
        )
        members.append(CurveCoeffs(values, modulus))
    return members
