"""The maps phi and psi and the rank tests built on point hyperplanes."""

import logging
from collections import Counter
from collections.abc import Sequence
from itertools import combinations

from cubiclab.curves import AffinePoint, CurveCoeffs
from cubiclab.dual.linalg import dot, normalize_vector, nullspace, rank, rref
from cubiclab.dual.models import (
    Degenerate,
    DualLine,
    DualPoint,
    Flat2,
    Hyperplane,
    NotAFlat,
    SolutionSpace,
)
from cubiclab.errors import InvalidInputError, ModulusMismatchError

logger = logging.getLogger(__name__)

# Degree <= 2 monomials (1, x, y, x^2, xy, y^2) are the first six slots
_CONIC_SLOTS = 6


def _check_points(points: Sequence[AffinePoint], sizes: range | tuple[int, ...]) -> int:
    """Validate cardinality, distinctness and a common field; return p."""
    if len(points) not in sizes:
        raise InvalidInputError(f"point set size {len(points)} not in {tuple(sizes)}")
    if len(set(points)) != len(points):
        raise InvalidInputError("point set contains duplicates")
    moduli = {q.modulus.p for q in points}
    if len(moduli) > 1:
        raise ModulusMismatchError(f"points over several fields: {sorted(moduli)}")
    return points[0].modulus.p


def phi(curve: CurveCoeffs) -> DualPoint:
    """A curve's normalized coefficient vector as a point of P^9."""
    return DualPoint(curve.values, curve.modulus)


def hyperplane_of_point(q: AffinePoint) -> Hyperplane:
    """The hyperplane pi_q of curves through q; the constant slot is always 1."""
    return Hyperplane(normalize_vector(q.monomials, q.modulus.p), q.modulus)


def intersect_hyperplanes(points: Sequence[AffinePoint]) -> SolutionSpace:
    """Rank of the conditions imposed by S and a canonical basis of the curves through S.

    Args:
        points: 1 to 10 distinct points over one field

    Returns:
        SolutionSpace(rank, basis) with the basis in reduced echelon form

    Raises:
        InvalidInputError: On duplicates or a size outside [1, 10]
    """
    p = _check_points(points, range(1, 11))
    rows = [q.monomials for q in points]
    return SolutionSpace(rank(rows, p), nullspace(rows, 10, p))


def check_independent_conditions(points: Sequence[AffinePoint]) -> bool:
    """Whether 7 or 8 points impose independent conditions on cubics.

    Raises:
        InvalidInputError: On duplicates or a size other than 7 or 8
    """
    p = _check_points(points, (7, 8))
    return rank([q.monomials for q in points], p) == len(points)


def flat_of(points: Sequence[AffinePoint]) -> Flat2 | NotAFlat:
    """The 2-flat pi_S of cubics through seven points, or NotAFlat when rank < 7.

    Raises:
        InvalidInputError: On duplicates or a size other than 7
    """
    p = _check_points(points, (7,))
    ordered = tuple(sorted(points, key=lambda q: q.key))
    rows = [q.monomials for q in ordered]

    solution_rank = rank(rows, p)
    if solution_rank < 7:
        return NotAFlat(solution_rank, ordered)

    basis = nullspace(rows, 10, p)
    _, pivots = rref(basis, p)
    return Flat2(
        basis=(basis[0], basis[1], basis[2]),
        pivots=(pivots[0], pivots[1], pivots[2]),
        points=ordered,
        modulus=ordered[0].modulus,
    )


def psi(q: AffinePoint, flat: Flat2) -> DualLine | Degenerate:
    """Restrict the covector of pi_q to the flat's basis.

    Returns:
        The normalized DualLine, or Degenerate when the restriction vanishes

    Raises:
        InvalidInputError: If q is one of the flat's defining points
    """
    if q in flat.points:
        raise InvalidInputError(f"{q} is one of the points defining the flat")
    p = flat.modulus.p
    restricted = [dot(q.monomials, row, p) for row in flat.basis]
    if not any(restricted):
        return Degenerate(q)
    a, b, c = normalize_vector(restricted, p)
    return DualLine((a, b, c), q)


def flat_coordinates(dp: DualPoint, flat: Flat2) -> tuple[int, int, int]:
    """Parameters (t0, t1, t2) with dp = t0*b0 + t1*b1 + t2*b2.

    The basis is in reduced echelon form, so the parameters are read off at
    the pivot columns and then verified.

    Raises:
        InvalidInputError: If dp does not lie in the flat
    """
    p = flat.modulus.p
    t = tuple(dp.coordinates[pivot] for pivot in flat.pivots)
    spanned = [sum(t_i * row[col] for t_i, row in zip(t, flat.basis)) % p for col in range(10)]
    if tuple(spanned) != dp.coordinates:
        raise InvalidInputError("dual point does not lie in the flat")
    return (t[0], t[1], t[2])


def flat_point(flat: Flat2, t: Sequence[int]) -> CurveCoeffs:
    """The curve t0*b0 + t1*b1 + t2*b2 of the flat.

    Raises:
        InvalidInputError: If all parameters vanish
    """
    p = flat.modulus.p
    values = tuple(
        sum(t_i * row[col] for t_i, row in zip(t, flat.basis, strict=True)) % p
        for col in range(10)
    )
    return CurveCoeffs(values, flat.modulus)


def dual_incidence(dp: DualPoint, dl: DualLine, flat: Flat2) -> bool:
    """Whether dp lies on dl, which holds iff the source of dl lies on the curve dp."""
    t = flat_coordinates(dp, flat)
    return dot(dl.covector, t, flat.modulus.p) == 0


def line_multiplicities(lines: Sequence[DualLine]) -> Counter[tuple[int, int, int]]:
    """Number of distinct source points behind each dual-line covector."""
    sources: dict[tuple[int, int, int], set[AffinePoint]] = {}
    for dl in lines:
        sources.setdefault(dl.covector, set()).add(dl.source)
    return Counter({covector: len(points) for covector, points in sources.items()})


def max_collinear(points: Sequence[AffinePoint]) -> int:
    """Size of the largest collinear subset of a point set."""
    distinct = list(dict.fromkeys(points))
    if len(distinct) <= 2:
        return len(distinct)

    p = distinct[0].modulus.p
    best = 2
    for a, b in combinations(distinct, 2):
        dx, dy = (b.x - a.x) % p, (b.y - a.y) % p
        on_line = sum(1 for q in distinct if (dy * (q.x - a.x) - dx * (q.y - a.y)) % p == 0)
        best = max(best, on_line)
    return best


def on_common_conic(points: Sequence[AffinePoint]) -> bool:
    """Whether some conic (degree <= 2 curve) passes through every point."""
    if len(points) < _CONIC_SLOTS:
        return True
    p = points[0].modulus.p
    return rank([q.monomials[:_CONIC_SLOTS] for q in points], p) < _CONIC_SLOTS


def flat_rows(flat: Flat2) -> list[list[int]]:
    """Audit rows for a flat: one CSV row of ten residues per basis vector."""
    return [list(row) for row in flat.basis]


def dual_line_row(dl: DualLine) -> list[int]:
    """Audit row for a dual line: source coordinates followed by the covector."""
    return [dl.source.x, dl.source.y, *dl.covector]
