"""Richness classes, the sets C_{k,S}, and rich points of dual line arrangements."""

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from cubiclab.curves import AffinePoint, incident
from cubiclab.dual import DualLine
from cubiclab.dual.linalg import normalize_vector
from cubiclab.errors import InvalidInputError
from cubiclab.incidence.engine import incidence_counts_per_curve
from cubiclab.incidence.models import CurveSet, PointSet, RichnessClass

logger = logging.getLogger(__name__)


def rich_curves(
    points: PointSet, curves: CurveSet, k: int, counts: Sequence[int] | None = None
) -> RichnessClass:
    """The class C_k of curves with k <= |curve cap P| < 2k.

    Args:
        points: The point set
        curves: The curve set
        k: Richness threshold, at least 1
        counts: Precomputed per-curve counts (computed when omitted)

    Raises:
        InvalidInputError: If k < 1
    """
    if k < 1:
        raise InvalidInputError(f"richness threshold must be at least 1, got {k}")
    if counts is None:
        counts = incidence_counts_per_curve(points, curves)

    members = [i for i, count in enumerate(counts) if k <= count < 2 * k]
    return RichnessClass(
        k=k,
        members=tuple(members),
        counts=tuple(counts[i] for i in members),
        points=points,
        curves=curves,
    )


def exactly_rich_curves(
    points: PointSet, curves: CurveSet, k: int, counts: Sequence[int] | None = None
) -> list[int]:
    """Indices of the curves with exactly k points of P (the class C_{=k}).

    Raises:
        InvalidInputError: If k < 0
    """
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    if counts is None:
        counts = incidence_counts_per_curve(points, curves)
    return [i for i, count in enumerate(counts) if count == k]


def richness_histogram(
    points: PointSet, curves: CurveSet, counts: Sequence[int] | None = None
) -> dict[int, int]:
    """|C_{=k}| for every k that occurs, keyed by k in increasing order."""
    if counts is None:
        counts = incidence_counts_per_curve(points, curves)
    return dict(sorted(Counter(counts).items()))


def rich_curves_through(richclass: RichnessClass, subset: Sequence[AffinePoint]) -> list[int]:
    """C_{k,S}: the members of a richness class passing through all seven points of S.

    Returns:
        Indices (into the CurveSet) of the qualifying members

    Raises:
        InvalidInputError: If S is not seven distinct points of P
    """
    if len(subset) != 7 or len(set(subset)) != 7:
        raise InvalidInputError(f"S must be 7 distinct points, got {len(subset)}")
    missing = [q for q in subset if q not in richclass.points]
    if missing:
        raise InvalidInputError(f"S is not contained in P: {missing[0]} is missing")

    return [
        i
        for i in richclass.members
        if all(incident(richclass.curves[i], q) for q in subset)
    ]


def _meet(u: tuple[int, int, int], v: tuple[int, int, int], p: int) -> tuple[int, ...]:
    """Normalized intersection point of two distinct projective lines."""
    return normalize_vector(
        (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ),
        p,
    )


def dual_point_richness(lines: Sequence[DualLine]) -> Counter[tuple[int, ...]]:
    """Number of distinct lines through every point where two distinct lines meet."""
    if not lines:
        return Counter()
    p = lines[0].source.modulus.p
    distinct = sorted({dl.covector for dl in lines})

    through: dict[tuple[int, ...], set[tuple[int, int, int]]] = {}
    for a in range(len(distinct)):
        for b in range(a + 1, len(distinct)):
            point = _meet(distinct[a], distinct[b], p)
            members = through.setdefault(point, set())
            members.add(distinct[a])
            members.add(distinct[b])
    return Counter({point: len(members) for point, members in through.items()})


def rich_dual_points(lines: Sequence[DualLine], t: int) -> int:
    """Number of points of the dual plane on at least t distinct lines.

    Lines with equal covectors count once, whatever their source points.

    Raises:
        InvalidInputError: If t < 2
    """
    if t < 2:
        raise InvalidInputError(f"t must be at least 2, got {t}")
    return sum(1 for richness in dual_point_richness(lines).values() if richness >= t)


@dataclass(frozen=True)
class DyadicDecomposition:
    """Measured split of I(P, C) around a threshold delta.

    Attributes:
        delta: The threshold
        low_sum: sum over k <= delta of |C_{=k}| * k
        high_sum: sum over k > delta of |C_{=k}| * k
        classes: (2^i * delta, |C_{2^i delta}|) for every nonempty dyadic class
        low_cap: delta * |C|
        high_cap: sum of |C_{2^i delta}| * 2^(i+1) * delta
    """

    delta: int
    low_sum: int
    high_sum: int
    classes: tuple[tuple[int, int], ...]
    low_cap: int
    high_cap: int

    @property
    def holds(self) -> bool:
        return self.low_sum <= self.low_cap and self.high_sum <= self.high_cap


def dyadic_decomposition(
    points: PointSet, curves: CurveSet, delta: int, counts: Sequence[int] | None = None
) -> DyadicDecomposition:
    """Split the incidences into curves with at most delta points and the dyadic classes above.

    Raises:
        InvalidInputError: If delta < 1
    """
    if delta < 1:
        raise InvalidInputError(f"delta must be at least 1, got {delta}")
    if counts is None:
        counts = incidence_counts_per_curve(points, curves)

    low_sum = sum(c for c in counts if c <= delta)
    high_sum = sum(c for c in counts if c > delta)

    classes = []
    k = delta
    top = max(counts, default=0)
    while k <= top:
        size = sum(1 for c in counts if k <= c < 2 * k)
        if size:
            classes.append((k, size))
        k *= 2

    return DyadicDecomposition(
        delta=delta,
        low_sum=low_sum,
        high_sum=high_sum,
        classes=tuple(classes),
        low_cap=delta * len(curves),
        high_cap=sum(size * 2 * k for k, size in classes),
    )
