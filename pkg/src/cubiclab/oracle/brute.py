"""Brute-force reference implementations.

Nothing here reuses the monomial caches, the counting engine or the root
finder: every answer comes from direct evaluation so that it can be compared
against the fast paths without sharing their mistakes.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any

import numpy as np

from cubiclab.curves import AffinePoint, CurveCoeffs, IrreducibilityClass, LinearForm
from cubiclab.env import get_settings
from cubiclab.errors import GuardExceededError, InvalidInputError, ModulusMismatchError
from cubiclab.field import CubicModulus, PrimeModulus
from cubiclab.field.poly import Poly, poly_add, poly_mul, trim
from cubiclab.incidence import CurveSet, PointSet

logger = logging.getLogger(__name__)

# c * x^i * y^j stays below 2^63 for residues under this bound
_INT64_GRID_MODULUS = 2**20


def _evaluate_directly(curve: CurveCoeffs, x: int, y: int) -> int:
    p = curve.modulus.p
    return sum(c * pow(x, i, p) * pow(y, j, p) for (i, j), c in curve.terms().items()) % p


def naive_count_incidences(points: PointSet, curves: CurveSet) -> int:
    """I(P, C) by a double loop over every (point, curve) pair.

    Accepted when p is within the enumeration guard or |P| * |C| is within the
    pair guard.

    Raises:
        ModulusMismatchError: If the sets live over different fields
        GuardExceededError: If both guards are exceeded
    """
    if points.modulus.p != curves.modulus.p:
        raise ModulusMismatchError(
            f"points over GF({points.modulus.p}) and curves over GF({curves.modulus.p})"
        )
    guards = get_settings().guards
    pairs = len(points) * len(curves)
    if points.modulus.p > guards.enumeration_max_p and pairs > guards.naive_max_pairs:
        raise GuardExceededError(
            f"refusing {pairs} naive evaluations over GF({points.modulus.p}) "
            f"(guards p <= {guards.enumeration_max_p} or pairs <= {guards.naive_max_pairs})"
        )

    total = 0
    for curve in curves:
        for q in points:
            if _evaluate_directly(curve, q.x, q.y) == 0:
                total += 1
    return total


@dataclass(frozen=True)
class IntersectionRecord:
    """Common affine GF(p)-points of two curves, found by full enumeration.

    Attributes:
        first: First curve
        second: Second curve
        points: Common zeros sorted by (x, y)
        first_class: Classification of the first curve
        second_class: Classification of the second curve
    """

    first: CurveCoeffs
    second: CurveCoeffs
    points: tuple[AffinePoint, ...]
    first_class: IrreducibilityClass
    second_class: IrreducibilityClass

    @property
    def size(self) -> int:
        return len(self.points)


def _zero_mask(curve: CurveCoeffs, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Boolean mask of f(x, y) == 0 over flattened coordinate arrays."""
    p = curve.modulus.p
    values = np.zeros(xs.shape, dtype=xs.dtype)
    for (i, j), c in curve.terms().items():
        values = (values + c * (xs**i % p) * (ys**j % p)) % p
    return values == 0


def intersect_curves(first: CurveCoeffs, second: CurveCoeffs) -> IntersectionRecord:
    """Enumerate all p^2 affine points and keep the common zeros of two curves.

    Raises:
        ModulusMismatchError: If the curves live over different fields
        InvalidInputError: If the curves are equal after normalization
        GuardExceededError: If p exceeds the enumeration guard
    """
    if first.modulus.p != second.modulus.p:
        raise ModulusMismatchError(f"curves over GF({first.modulus.p}) and GF({second.modulus.p})")
    if first == second:
        raise InvalidInputError(f"cannot intersect {first} with itself")

    p = first.modulus.p
    guard = get_settings().guards.enumeration_max_p
    if p > guard:
        raise GuardExceededError(f"refusing to enumerate {p}^2 points (guard p <= {guard})")

    dtype = np.int64 if p <= _INT64_GRID_MODULUS else object
    ys = np.arange(p).astype(dtype)
    rows_per_chunk = max(1, get_settings().engine.block_pairs // p)
    common: list[AffinePoint] = []
    for start in range(0, p, rows_per_chunk):
        stop = min(p, start + rows_per_chunk)
        xs = np.repeat(np.arange(start, stop).astype(dtype), p)
        grid_ys = np.tile(ys, stop - start)
        mask = _zero_mask(first, xs, grid_ys) & _zero_mask(second, xs, grid_ys)
        common.extend(
            AffinePoint(int(x), int(y), first.modulus)
            for x, y in zip(xs[mask], grid_ys[mask], strict=True)
        )

    return IntersectionRecord(
        first=first,
        second=second,
        points=tuple(common),
        first_class=first.classification,
        second_class=second.classification,
    )


def _elements(field: PrimeModulus | CubicModulus) -> list[Any]:
    """Every element of the field in lexicographic order of its raw form."""
    p = field.characteristic
    if field.degree == 1:
        return list(range(p))
    return list(product(range(p), repeat=3))


def _substitute(
    curve: CurveCoeffs, x_poly: Poly, y_poly: Poly, field: PrimeModulus | CubicModulus
) -> Poly:
    """f(x_poly(t), y_poly(t)) as a trimmed polynomial in t."""
    total: Poly = []
    for (i, j), c in curve.terms().items():
        term: Poly = [field.embed(c)]
        for _ in range(i):
            term = poly_mul(term, x_poly, field)
        for _ in range(j):
            term = poly_mul(term, y_poly, field)
        total = poly_add(total, term, field)
    return trim(total, field)


def exhaustive_linear_factor_search(
    curve: CurveCoeffs, extension: PrimeModulus | CubicModulus
) -> LinearForm | None:
    """Scan every projective linear form over a field for a factor of the homogenized cubic.

    The scan order is X + b*Y + c*Z for (b, c) in lexicographic order, then
    Y + c*Z; Z itself never divides a cubic. A form divides F(X, Y, Z) iff
    substituting its solved variable leaves the zero polynomial. Forms X + b*Y + c*Z whose point at
    infinity (-b : 1 : 0) is off the cubic part are skipped without scanning c.

    Args:
        curve: A degree-3 curve
        extension: GF(p) or GF(p^3) with the curve's characteristic

    Returns:
        The first dividing form, or None

    Raises:
        InvalidInputError: If the curve is not a cubic
        ModulusMismatchError: If the field has another characteristic
        GuardExceededError: If p exceeds the guard for the requested field
    """
    if curve.degree != 3:
        raise InvalidInputError(f"linear factor search needs a cubic, got degree {curve.degree}")
    p = curve.modulus.p
    if extension.characteristic != p:
        raise ModulusMismatchError(
            f"curve over GF({p}) searched in characteristic {extension.characteristic}"
        )
    guards = get_settings().guards
    guard = guards.enumeration_max_p if extension.degree == 1 else guards.extension_search_max_p
    if p > guard:
        raise GuardExceededError(
            f"refusing to scan linear forms over GF({p}^{extension.degree}) (guard p <= {guard})"
        )

    zero, one = extension.zero(), extension.one()
    elements = _elements(extension)
    cubic_part = CurveCoeffs.from_monomials(
        {m: c for m, c in curve.terms().items() if sum(m) == 3}, curve.modulus
    )

    for b in elements:
        # X = -b*Y on the line at infinity
        if _substitute(cubic_part, [zero, extension.neg(b)], [zero, one], extension):
            continue
        for c in elements:
            solved_x = [extension.neg(c), extension.neg(b)]
            if not _substitute(curve, solved_x, [zero, one], extension):
                return LinearForm(one, b, c, extension)

    for c in elements:
        if not _substitute(curve, [zero, one], [extension.neg(c)], extension):
            return LinearForm(zero, one, c, extension)

    # Z never divides a form with a nonzero cubic part
    return None
