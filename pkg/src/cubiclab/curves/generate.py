"""Seeded random curves for instance generation and Bezout campaigns."""

import numpy as np

from cubiclab.curves.classify import is_irreducible_conic
from cubiclab.curves.models import NUM_MONOMIALS, CurveCoeffs, IrreducibilityClass
from cubiclab.field import PrimeModulus

# Conic coefficients occupy the first six monomial slots
_CONIC_SLOTS = 6


def as_generator(rng: np.random.Generator | int) -> np.random.Generator:
    """Accept either a generator or an integer seed."""
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def _random_values(rng: np.random.Generator, p: int, slots: int) -> tuple[int, ...]:
    drawn = rng.integers(0, p, size=slots)
    return tuple(int(c) for c in drawn) + (0,) * (NUM_MONOMIALS - slots)


def random_irreducible_cubic(
    rng: np.random.Generator | int, modulus: PrimeModulus
) -> CurveCoeffs:
    """Rejection-sample a uniform coefficient vector until it is an absolutely irreducible cubic.

    Args:
        rng: Generator or seed; equal seeds give equal curves
        modulus: The base field

    Returns:
        A degree-3 AbsolutelyIrreducible curve
    """
    generator = as_generator(rng)
    while True:
        values = _random_values(generator, modulus.p, NUM_MONOMIALS)
        if not any(values[6:]):
            continue
        curve = CurveCoeffs(values, modulus)
        if curve.classification is IrreducibilityClass.ABSOLUTELY_IRREDUCIBLE:
            return curve


def random_line(rng: np.random.Generator | int, modulus: PrimeModulus) -> CurveCoeffs:
    """A uniform line a*x + b*y + c = 0 with (a, b) != (0, 0)."""
    generator = as_generator(rng)
    while True:
        values = _random_values(generator, modulus.p, 3)
        if values[1] or values[2]:
            return CurveCoeffs(values, modulus)


def random_irreducible_conic(
    rng: np.random.Generator | int, modulus: PrimeModulus
) -> CurveCoeffs:
    """Rejection-sample a nonsingular (absolutely irreducible) conic."""
    generator = as_generator(rng)
    while True:
        values = _random_values(generator, modulus.p, _CONIC_SLOTS)
        if not any(values[3:_CONIC_SLOTS]):
            continue
        curve = CurveCoeffs(values, modulus)
        if is_irreducible_conic(curve):
            return curve
