"""Seeded instance generators.

Point families:
    uniform-random: distinct points drawn uniformly from GF(p)^2.
    grid: the first |P| points of the s x s grid {0..s-1}^2 in (x, y) order,
        with s = ceil(sqrt(|P|)).
    on-curves-adversarial: seven base points imposing independent conditions,
        a few absolutely irreducible carrier cubics through all seven, and
        further points taken round-robin from the carriers' rational points.
        Every carrier is rich, and any seven base points lie on all of them.

Curve families:
    uniform-irreducible: rejection-sampled absolutely irreducible cubics.
    translate-family: translates f(x - a, y - b) of one random irreducible cubic.
    through-common-points: irreducible members of the 2-flat of cubics through
        seven points of P (the carriers first when the points are adversarial).

The reducible counterexample puts every point on y = 0 and uses the curves
y * g(x, y) for random conics g, so that I(P, C) = |P| * |C|.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from math import isqrt

import numpy as np

from cubiclab.curves import (
    AffinePoint,
    CurveCoeffs,
    incident,
    line,
    multiply,
    random_irreducible_cubic,
    rational_points,
    translate,
)
from cubiclab.curves.models import NUM_MONOMIALS
from cubiclab.dual import Flat2, flat_of, flat_point
from cubiclab.errors import InvalidInputError
from cubiclab.field import PrimeModulus
from cubiclab.incidence import CurveSet, PointSet

logger = logging.getLogger(__name__)

# Rejection loops give up after this many draws per requested object
_ATTEMPTS_PER_ITEM = 200
_ATTEMPTS_FLOOR = 1000


class PointKind(Enum):
    """Point generator families."""

    UNIFORM_RANDOM = "uniform-random"
    GRID = "grid"
    ON_CURVES_ADVERSARIAL = "on-curves-adversarial"


class CurveKind(Enum):
    """Curve generator families."""

    UNIFORM_IRREDUCIBLE = "uniform-irreducible"
    TRANSLATE_FAMILY = "translate-family"
    THROUGH_COMMON_POINTS = "through-common-points"


@dataclass(frozen=True)
class InstanceSpec:
    """Parameters of a generated instance; equal specs give equal instances.

    Attributes:
        p: Prime field size
        point_kind: Point generator family
        curve_kind: Curve generator family
        n_points: |P|
        n_curves: |C|
        seed: Master seed
        carrier_curves: Carrier cubics of the adversarial point family
        reducible_counterexample: Replace both families by the line-times-conic construction
    """

    p: int
    point_kind: PointKind
    curve_kind: CurveKind
    n_points: int
    n_curves: int
    seed: int
    carrier_curves: int = 2
    reducible_counterexample: bool = False

    def __post_init__(self) -> None:
        if self.n_points < 0 or self.n_curves < 0:
            raise InvalidInputError(
                f"sizes must be nonnegative, got |P|={self.n_points}, |C|={self.n_curves}"
            )
        if self.carrier_curves < 1:
            raise InvalidInputError(f"need at least one carrier curve, got {self.carrier_curves}")


def _max_attempts(count: int) -> int:
    return _ATTEMPTS_FLOOR + _ATTEMPTS_PER_ITEM * count


def _check_point_capacity(spec: InstanceSpec) -> None:
    if spec.n_points > spec.p * spec.p:
        raise InvalidInputError(f"{spec.n_points} points requested but GF({spec.p})^2 has fewer")


def uniform_points(n: int, modulus: PrimeModulus, rng: np.random.Generator) -> list[AffinePoint]:
    """n distinct uniform points, in draw order."""
    p = modulus.p
    if 2 * n > p * p:
        chosen = rng.permutation(p * p)[:n]
        return [AffinePoint(int(i) // p, int(i) % p, modulus) for i in chosen]

    seen: dict[tuple[int, int], None] = {}
    while len(seen) < n:
        xs = rng.integers(0, p, size=n - len(seen))
        ys = rng.integers(0, p, size=n - len(seen))
        for x, y in zip(xs, ys, strict=True):
            seen.setdefault((int(x), int(y)), None)
    return [AffinePoint(x, y, modulus) for x, y in seen]


def grid_points(n: int, modulus: PrimeModulus) -> list[AffinePoint]:
    """The first n points of the smallest square grid holding n points.

    Raises:
        InvalidInputError: If the grid side exceeds p
    """
    side = isqrt(n)
    if side * side < n:
        side += 1
    if side > modulus.p:
        raise InvalidInputError(f"a {side} x {side} grid does not fit in GF({modulus.p})^2")
    return [AffinePoint(x, y, modulus) for x in range(side) for y in range(side)][:n]


def _independent_base(
    candidates: list[AffinePoint], rng: np.random.Generator, attempts: int
) -> Flat2:
    """A Flat2 for some seven points of candidates, trying the first seven first."""
    if len(candidates) < 7:
        raise InvalidInputError(f"need 7 points for a common-point family, got {len(candidates)}")
    flat = flat_of(candidates[:7])
    for _ in range(attempts):
        if isinstance(flat, Flat2):
            return flat
        chosen = rng.choice(len(candidates), size=7, replace=False)
        flat = flat_of([candidates[int(i)] for i in chosen])
    raise InvalidInputError("no seven points imposing independent conditions were found")


def _irreducible_members(
    flat: Flat2, count: int, rng: np.random.Generator, exclude: set[CurveCoeffs]
) -> list[CurveCoeffs]:
    """Distinct absolutely irreducible cubics of a flat, drawn by uniform parameters."""
    p = flat.modulus.p
    if count > p * p + p + 1:
        raise InvalidInputError(f"a 2-flat over GF({p}) has fewer than {count} curves")

    members: list[CurveCoeffs] = []
    seen = set(exclude)
    for _ in range(_max_attempts(count)):
        if len(members) == count:
            break
        t = [int(v) for v in rng.integers(0, p, size=3)]
        if not any(t):
            continue
        curve = flat_point(flat, t)
        if curve in seen or not curve.is_irreducible_cubic:
            continue
        seen.add(curve)
        members.append(curve)
    if len(members) < count:
        raise InvalidInputError(f"only {len(members)} of {count} irreducible curves found")
    return members


def adversarial_points(
    spec: InstanceSpec, modulus: PrimeModulus, rng: np.random.Generator
) -> tuple[list[AffinePoint], list[CurveCoeffs]]:
    """Base points first, then carrier points round-robin, padded uniformly if short.

    Returns:
        The points and the carrier curves
    """
    flat = None
    for _ in range(_max_attempts(1)):
        flat = flat_of(uniform_points(7, modulus, rng))
        if isinstance(flat, Flat2):
            break
    if not isinstance(flat, Flat2):
        raise InvalidInputError(f"no independent seven points found in GF({modulus.p})^2")
    carriers = _irreducible_members(flat, spec.carrier_curves, rng, set())

    points = list(flat.points)
    taken = set(points)
    pools = []
    for carrier in carriers:
        pool = rational_points(carrier)
        pools.append([pool[int(i)] for i in rng.permutation(len(pool))])

    while len(points) < spec.n_points and any(pools):
        for pool in pools:
            while pool and pool[0] in taken:
                pool.pop(0)
            if pool and len(points) < spec.n_points:
                q = pool.pop(0)
                points.append(q)
                taken.add(q)

    if len(points) < spec.n_points:
        logger.info(f"Carriers exhausted at {len(points)} points; padding uniformly")
    while len(points) < spec.n_points:
        x, y = (int(v) for v in rng.integers(0, modulus.p, size=2))
        q = AffinePoint(x, y, modulus)
        if q not in taken:
            points.append(q)
            taken.add(q)

    return points[: spec.n_points], carriers


def uniform_curves(
    count: int, modulus: PrimeModulus, rng: np.random.Generator
) -> list[CurveCoeffs]:
    """Distinct absolutely irreducible cubics by rejection sampling."""
    curves: dict[CurveCoeffs, None] = {}
    for _ in range(_max_attempts(count)):
        if len(curves) == count:
            break
        curves.setdefault(random_irreducible_cubic(rng, modulus), None)
    if len(curves) < count:
        raise InvalidInputError(f"only {len(curves)} of {count} distinct irreducible cubics found")
    return list(curves)


def translate_family(
    count: int, modulus: PrimeModulus, rng: np.random.Generator
) -> list[CurveCoeffs]:
    """Distinct translates of one random irreducible cubic, the base curve first."""
    p = modulus.p
    if count > p * p:
        raise InvalidInputError(f"{count} translates requested but GF({p})^2 has fewer")
    if count == 0:
        return []

    base = random_irreducible_cubic(rng, modulus)
    curves: dict[CurveCoeffs, None] = {base: None}
    for _ in range(_max_attempts(count)):
        if len(curves) == count:
            break
        a, b = (int(v) for v in rng.integers(0, p, size=2))
        curves.setdefault(translate(base, a, b), None)
    if len(curves) < count:
        raise InvalidInputError(f"only {len(curves)} of {count} distinct translates found")
    return list(curves)


def through_common_points(
    count: int,
    points: list[AffinePoint],
    rng: np.random.Generator,
    carriers: list[CurveCoeffs] | None = None,
) -> list[CurveCoeffs]:
    """Irreducible cubics through seven common points of P."""
    if count == 0:
        return []
    flat = _independent_base(points, rng, _max_attempts(1))
    preferred = [c for c in carriers or [] if all(incident(c, q) for q in flat.points)]
    preferred = preferred[:count]
    return preferred + _irreducible_members(flat, count - len(preferred), rng, set(preferred))


def reducible_counterexample(
    spec: InstanceSpec, modulus: PrimeModulus, rng: np.random.Generator
) -> tuple[list[AffinePoint], list[CurveCoeffs]]:
    """Points on y = 0 and the curves y * g for distinct random conics g.

    Raises:
        InvalidInputError: If |P| > p
    """
    p = modulus.p
    if spec.n_points > p:
        raise InvalidInputError(f"{spec.n_points} points do not fit on one line over GF({p})")
    xs = rng.permutation(p)[: spec.n_points]
    points = [AffinePoint(int(x), 0, modulus) for x in xs]

    axis = line(0, 1, 0, modulus)
    curves: dict[CurveCoeffs, None] = {}
    for _ in range(_max_attempts(spec.n_curves)):
        if len(curves) == spec.n_curves:
            break
        values = [int(v) for v in rng.integers(0, p, size=6)] + [0] * (NUM_MONOMIALS - 6)
        if not any(values):
            continue
        curves.setdefault(multiply(axis, CurveCoeffs(tuple(values), modulus)), None)
    if len(curves) < spec.n_curves:
        raise InvalidInputError(f"only {len(curves)} of {spec.n_curves} distinct curves found")
    return points, list(curves)


def generate_instance(spec: InstanceSpec) -> tuple[PointSet, CurveSet]:
    """Build (P, C) for a spec; deterministic given the seed.

    The CurveSet is flagged irreducible unless the reducible counterexample was
    requested, and the flag re-checks every curve on construction.

    Raises:
        InvalidInputError: If the sizes are infeasible for the field or family
    """
    modulus = PrimeModulus(spec.p)
    rng = np.random.default_rng(spec.seed)
    _check_point_capacity(spec)

    if spec.reducible_counterexample:
        points, curves = reducible_counterexample(spec, modulus, rng)
        logger.info(f"Generated reducible counterexample: |P|={len(points)}, |C|={len(curves)}")
        return PointSet(tuple(points), modulus), CurveSet(tuple(curves), modulus)

    carriers: list[CurveCoeffs] = []
    if spec.point_kind is PointKind.UNIFORM_RANDOM:
        points = uniform_points(spec.n_points, modulus, rng)
    elif spec.point_kind is PointKind.GRID:
        points = grid_points(spec.n_points, modulus)
    else:
        points, carriers = adversarial_points(spec, modulus, rng)

    if spec.curve_kind is CurveKind.UNIFORM_IRREDUCIBLE:
        curves = uniform_curves(spec.n_curves, modulus, rng)
    elif spec.curve_kind is CurveKind.TRANSLATE_FAMILY:
        curves = translate_family(spec.n_curves, modulus, rng)
    else:
        curves = through_common_points(spec.n_curves, points, rng, carriers)

    logger.info(
        f"Generated {spec.point_kind.value}/{spec.curve_kind.value} instance over GF({spec.p}): "
        f"|P|={len(points)}, |C|={len(curves)}"
    )
    return PointSet(tuple(points), modulus), CurveSet(tuple(curves), modulus, irreducible=True)
