"""Evaluation, enumeration and algebraic plumbing for curves."""

import logging
from collections.abc import Sequence
from math import comb

import numpy as np

from cubiclab.curves.models import MONOMIALS, AffinePoint, CurveCoeffs
from cubiclab.env import get_settings
from cubiclab.errors import GuardExceededError, InvalidInputError, ModulusMismatchError
from cubiclab.field import FpElement, PrimeModulus

logger = logging.getLogger(__name__)


def _check_same_field(curve: CurveCoeffs, q: AffinePoint) -> None:
    if curve.modulus.p != q.modulus.p:
        raise ModulusMismatchError(
            f"curve over GF({curve.modulus.p}) evaluated at a point over GF({q.modulus.p})"
        )


def evaluate_vector(values: Sequence[int | FpElement], q: AffinePoint) -> FpElement:
    """Evaluate an arbitrary (unnormalized) coefficient vector at q.

    Args:
        values: Ten coefficients in monomial order
        q: Point to evaluate at

    Returns:
        sum c_ij * x^i * y^j as a residue

    Raises:
        InvalidInputError: If the vector does not have ten entries
    """
    if len(values) != len(MONOMIALS):
        raise InvalidInputError(f"expected {len(MONOMIALS)} coefficients, got {len(values)}")
    p = q.modulus.p
    total = sum(int(c) * m for c, m in zip(values, q.monomials, strict=True))
    return q.modulus.element(total % p)


def evaluate(curve: CurveCoeffs, q: AffinePoint) -> FpElement:
    """Evaluate the normalized curve polynomial at q.

    Raises:
        ModulusMismatchError: If the curve and point live over different fields
    """
    _check_same_field(curve, q)
    return evaluate_vector(curve.values, q)


def incident(curve: CurveCoeffs, q: AffinePoint) -> bool:
    """True iff q lies on the curve."""
    return evaluate(curve, q).value == 0


def rational_points(curve: CurveCoeffs, max_p: int | None = None) -> list[AffinePoint]:
    """Enumerate every affine GF(p)-point of a curve, sorted by (x, y).

    Each vertical line x = x0 is evaluated as one vectorized pass over all y.

    Args:
        curve: Curve to enumerate
        max_p: Enumeration guard (defaults to the configured guard)

    Returns:
        Sorted list of points on the curve

    Raises:
        GuardExceededError: If p exceeds the enumeration guard
    """
    guard = get_settings().guards.enumeration_max_p if max_p is None else max_p
    p = curve.modulus.p
    if p > guard:
        raise GuardExceededError(f"refusing to enumerate {p}^2 points (guard p <= {guard})")

    # Products of two residues must fit the dtype
    dtype = np.int64 if p < 2**31 else object
    ys = np.arange(p, dtype=np.int64).astype(dtype)
    y_powers = [np.ones(p, dtype=np.int64).astype(dtype), ys, ys * ys % p]
    y_powers.append(y_powers[2] * ys % p)

    points: list[AffinePoint] = []
    for x0 in range(p):
        column = column_polynomial(curve, x0)
        values = np.zeros(p, dtype=np.int64).astype(dtype)
        for power, coefficient in enumerate(column):
            if coefficient:
                values = (values + coefficient * y_powers[power]) % p
        roots = np.flatnonzero(values == 0)
        points.extend(AffinePoint(x0, int(y0), curve.modulus) for y0 in roots)

    logger.debug(f"{curve} has {len(points)} affine points")
    return points


def column_polynomial(curve: CurveCoeffs, x0: int) -> list[int]:
    """The univariate polynomial f(x0, y), lowest degree first."""
    p = curve.modulus.p
    column = [0, 0, 0, 0]
    for (i, j), c in curve.terms().items():
        column[j] = (column[j] + c * pow(x0, i, p)) % p
    return column


def _expand(
    terms: dict[tuple[int, int], int], a: int, b: int, p: int
) -> dict[tuple[int, int], int]:
    """Expand sum c_ij (x + a)^i (y + b)^j into monomials."""
    out: dict[tuple[int, int], int] = {}
    for (i, j), c in terms.items():
        for k in range(i + 1):
            x_part = comb(i, k) * pow(a, i - k, p)
            for m in range(j + 1):
                y_part = comb(j, m) * pow(b, j - m, p)
                key = (k, m)
                out[key] = (out.get(key, 0) + c * x_part * y_part) % p
    return out


def translate(curve: CurveCoeffs, a: int, b: int) -> CurveCoeffs:
    """The translate f(x - a, y - b), whose points are those of the curve shifted by (a, b)."""
    p = curve.modulus.p
    return CurveCoeffs.from_monomials(_expand(curve.terms(), -a % p, -b % p, p), curve.modulus)


def multiply(f: CurveCoeffs, g: CurveCoeffs) -> CurveCoeffs:
    """The product curve f * g.

    Raises:
        ModulusMismatchError: If the factors live over different fields
        InvalidInputError: If deg f + deg g exceeds three
    """
    if f.modulus.p != g.modulus.p:
        raise ModulusMismatchError(f"factors over GF({f.modulus.p}) and GF({g.modulus.p})")
    if f.degree + g.degree > 3:
        raise InvalidInputError(f"product of degrees {f.degree} and {g.degree} exceeds 3")

    p = f.modulus.p
    product: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in f.terms().items():
        for (i2, j2), c2 in g.terms().items():
            key = (i1 + i2, j1 + j2)
            product[key] = (product.get(key, 0) + c1 * c2) % p
    return CurveCoeffs.from_monomials(product, f.modulus)


def line(a: int, b: int, c: int, modulus: PrimeModulus) -> CurveCoeffs:
    """The line a*x + b*y + c = 0."""
    return CurveCoeffs.from_monomials({(1, 0): a, (0, 1): b, (0, 0): c}, modulus)
