"""Shared fixtures."""

import pytest

from cubiclab.curves import AffinePoint, CurveCoeffs
from cubiclab.env import use_config
from cubiclab.field import PrimeModulus


@pytest.fixture(autouse=True)
def default_settings():
    """Every test starts from the built-in settings."""
    use_config(None)
    yield
    use_config(None)


@pytest.fixture
def f5() -> PrimeModulus:
    return PrimeModulus(5)


@pytest.fixture
def f7() -> PrimeModulus:
    return PrimeModulus(7)


@pytest.fixture
def f13() -> PrimeModulus:
    return PrimeModulus(13)


def _cubic_graph(modulus: PrimeModulus) -> CurveCoeffs:
    return CurveCoeffs.from_monomials({(0, 1): 1, (3, 0): -1}, modulus)


def _graph_points(modulus: PrimeModulus) -> list[AffinePoint]:
    p = modulus.p
    return [AffinePoint(x, pow(x, 3, p), modulus) for x in range(p)]


@pytest.fixture
def cubic_graph():
    """Factory for the curve y - x^3 = 0 over a given field."""
    return _cubic_graph


@pytest.fixture
def graph_points():
    """Factory for the p points (x, x^3) of y = x^3."""
    return _graph_points
