"""Irreducibility classification of plane cubics.

A degree-3 form without a GF(p)-rational linear factor can only split over the
closure as three Galois-conjugate lines, so a linear-factor search over GF(p)
followed by one over GF(p^3) decides absolute irreducibility.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Any

import numpy as np

from cubiclab.curves.models import CurveCoeffs, IrreducibilityClass, RationalClass
from cubiclab.curves.ops import column_polynomial
from cubiclab.env import get_settings
from cubiclab.errors import InvalidInputError, ModulusMismatchError
from cubiclab.field import CubicModulus, PrimeModulus, find_cubic_modulus, poly_roots
from cubiclab.field.poly import FieldContext, degree, poly_gcd, trim

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearForm:
    """A projective line a*X + b*Y + c*Z = 0 with coefficients in a field context.

    Attributes:
        a: Coefficient of X
        b: Coefficient of Y
        c: Coefficient of Z (the affine constant term)
        field: The field the coefficients live in
    """

    a: Any
    b: Any
    c: Any
    field: PrimeModulus | CubicModulus

    def __str__(self) -> str:
        return f"{self.a}*X + {self.b}*Y + {self.c}*Z"


def _common_root(polys: list[list[Any]], field: FieldContext) -> Any | None:
    """Smallest common root of a family of polynomials, or None."""
    nonzero = [trim(f, field) for f in polys]
    nonzero = [f for f in nonzero if f]
    if not nonzero:
        return field.zero()

    common = nonzero[0]
    for f in nonzero[1:]:
        common = poly_gcd(common, f, field)
    if degree(common) < 1:
        return None

    roots = poly_roots(common, field)
    return roots[0] if roots else None


def find_linear_factor(
    curve: CurveCoeffs, field: PrimeModulus | CubicModulus | None = None
) -> LinearForm | None:
    """Find a linear factor of a cubic with coefficients in the given field.

    A factor X - u*Y - c*Z has its point at infinity (u : 1 : 0) on the cubic
    part, so u ranges over the roots of f3(u, 1); substituting x = u*y + c then
    leaves polynomials in c whose common roots are exactly the valid offsets.
    Factors Y - c*Z are only possible when the x^3 coefficient vanishes.

    Args:
        curve: A degree-3 curve
        field: GF(p) (default) or its cubic extension

    Returns:
        The first factor found, or None

    Raises:
        InvalidInputError: If the curve does not have degree three
        ModulusMismatchError: If the field has another characteristic
    """
    if curve.degree != 3:
        raise InvalidInputError(f"linear factor search needs a cubic, got degree {curve.degree}")
    ctx: PrimeModulus | CubicModulus = curve.modulus if field is None else field
    if ctx.characteristic != curve.modulus.p:
        raise ModulusMismatchError(
            f"curve over GF({curve.modulus.p}) searched in characteristic {ctx.characteristic}"
        )

    terms = {m: ctx.embed(c) for m, c in curve.terms().items()}
    zero = ctx.zero()

    cubic_part = [terms.get(m, zero) for m in ((0, 3), (1, 2), (2, 1), (3, 0))]
    for u in poly_roots(cubic_part, ctx):
        # f(u*y + c, y) = sum_k G_k(c) * y^k
        restricted = [[zero] * 4 for _ in range(4)]
        for (i, j), coefficient in terms.items():
            for k in range(i + 1):
                scale = ctx.mul(ctx.embed(comb(i, k)), ctx.pow(u, k))
                restricted[k + j][i - k] = ctx.add(
                    restricted[k + j][i - k], ctx.mul(coefficient, scale)
                )
        offset = _common_root(restricted, ctx)
        if offset is not None:
            return LinearForm(ctx.one(), ctx.neg(u), ctx.neg(offset), ctx)

    if (3, 0) not in terms:
        # f(x, c) = sum_i H_i(c) * x^i
        restricted = [[zero] * 4 for _ in range(4)]
        for (i, j), coefficient in terms.items():
            restricted[i][j] = ctx.add(restricted[i][j], coefficient)
        offset = _common_root(restricted, ctx)
        if offset is not None:
            return LinearForm(zero, ctx.one(), ctx.neg(offset), ctx)

    return None


def _has_two_rational_points(curve: CurveCoeffs) -> bool:
    """Look for two affine GF(p)-points on vertical lines through probed x."""
    p = curve.modulus.p
    probes = get_settings().sampling.rational_point_probes
    if p <= probes:
        xs = list(range(p))
    else:
        rng = np.random.default_rng(list(curve.values))
        xs = list(dict.fromkeys(int(x) for x in rng.integers(0, p, size=probes)))

    found = 0
    for x0 in xs:
        column = column_polynomial(curve, x0)
        if not any(column):
            return True
        found += len(poly_roots(column, curve.modulus))
        if found >= 2:
            return True
    return False


def classify_irreducibility(curve: CurveCoeffs) -> IrreducibilityClass:
    """Classify a curve over the algebraic closure of GF(p).

    Conjugate lines meet in at most one GF(p)-point, so once rational factors
    are excluded two rational points certify absolute irreducibility without
    touching GF(p^3).

    Args:
        curve: A nonzero curve

    Returns:
        LOW_DEGREE for degree <= 2, otherwise the cubic's class
    """
    if curve.degree < 3:
        return IrreducibilityClass.LOW_DEGREE

    if find_linear_factor(curve) is not None:
        return IrreducibilityClass.REDUCIBLE_RATIONAL

    if _has_two_rational_points(curve):
        return IrreducibilityClass.ABSOLUTELY_IRREDUCIBLE

    extension = find_cubic_modulus(curve.modulus)
    if find_linear_factor(curve, extension) is not None:
        logger.debug(f"{curve} splits into conjugate lines over GF(p^3)")
        return IrreducibilityClass.CONJUGATE_LINES

    return IrreducibilityClass.ABSOLUTELY_IRREDUCIBLE


def classify_rational(curve: CurveCoeffs) -> RationalClass:
    """Classify a curve over GF(p) itself."""
    if curve.degree < 3:
        return RationalClass.LOW_DEGREE
    if find_linear_factor(curve) is not None:
        return RationalClass.REDUCIBLE
    return RationalClass.IRREDUCIBLE


def conic_discriminant(curve: CurveCoeffs) -> int:
    """Half-discriminant 4acf + bde - ae^2 - cd^2 - fb^2 of a conic.

    For a*x^2 + b*xy + c*y^2 + d*x + e*y + f; nonzero exactly when the conic is
    nonsingular, in every characteristic.

    Raises:
        InvalidInputError: If the curve is not of degree two
    """
    if curve.degree != 2:
        raise InvalidInputError(f"expected a conic, got degree {curve.degree}")
    a, b, c = curve.coeff(2, 0), curve.coeff(1, 1), curve.coeff(0, 2)
    d, e, f = curve.coeff(1, 0), curve.coeff(0, 1), curve.coeff(0, 0)
    return (4 * a * c * f + b * d * e - a * e * e - c * d * d - f * b * b) % curve.modulus.p


def is_irreducible_conic(curve: CurveCoeffs) -> bool:
    """True iff the curve is an absolutely irreducible conic."""
    return curve.degree == 2 and conic_discriminant(curve) != 0
