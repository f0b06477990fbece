"""Tests for the brute-force oracles and the Bezout campaign."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubiclab.curves import (
    AffinePoint,
    CurveCoeffs,
    IrreducibilityClass,
    find_linear_factor,
    line,
    multiply,
    random_irreducible_cubic,
)
from cubiclab.env import use_config
from cubiclab.errors import GuardExceededError, InvalidInputError, ModulusMismatchError
from cubiclab.experiments import uniform_points
from cubiclab.field import PrimeModulus, find_cubic_modulus
from cubiclab.incidence import CurveSet, PointSet, count_incidences
from cubiclab.oracle import (
    BEZOUT_CSV_HEADER,
    PairKind,
    bezout_campaign,
    bezout_trial,
    exhaustive_linear_factor_search,
    intersect_curves,
    naive_count_incidences,
    write_bezout_rows,
)


@pytest.fixture
def tight_guards(tmp_path):
    """Settings whose guards reject anything beyond GF(3) and a single pair."""
    path = tmp_path / "guards.yaml"
    path.write_text("guards:\n  enumeration_max_p: 3\n  naive_max_pairs: 1\n")
    use_config(path)


def test_naive_count_matches_engine(f13):
    grid = tuple(AffinePoint(x, y, f13) for x in range(13) for y in range(0, 13, 2))
    points = PointSet(grid, f13)
    curves = CurveSet(tuple(random_irreducible_cubic(seed, f13) for seed in range(6)), f13)
    assert naive_count_incidences(points, curves) == count_incidences(points, curves)


def test_naive_count_guard(tight_guards, f13, cubic_graph):
    points = PointSet((AffinePoint(0, 0, f13), AffinePoint(1, 1, f13)), f13)
    with pytest.raises(GuardExceededError):
        naive_count_incidences(points, CurveSet((cubic_graph(f13),), f13))


def test_intersect_graph_with_its_mirror(f5, cubic_graph):
    # over GF(5), y = x^3 and x = y^3 force x^9 = x, which every x satisfies
    mirror = CurveCoeffs.from_monomials({(1, 0): 1, (0, 3): -1}, f5)
    record = intersect_curves(cubic_graph(f5), mirror)
    assert record.size == 5
    assert record.points == tuple(AffinePoint(x, pow(x, 3, 5), f5) for x in range(5))
    assert record.first_class is IrreducibilityClass.ABSOLUTELY_IRREDUCIBLE


def test_intersect_parallel_graphs(f7, cubic_graph):
    shifted = CurveCoeffs.from_monomials({(0, 1): 1, (3, 0): -1, (0, 0): -1}, f7)
    assert intersect_curves(cubic_graph(f7), shifted).size == 0


def test_intersect_rejects_equal_curves(f7, cubic_graph):
    with pytest.raises(InvalidInputError):
        intersect_curves(cubic_graph(f7), cubic_graph(f7))


def test_intersect_rejects_mixed_fields(f5, f7, cubic_graph):
    with pytest.raises(ModulusMismatchError):
        intersect_curves(cubic_graph(f5), cubic_graph(f7))


def test_intersect_guard(tight_guards, f5, cubic_graph):
    with pytest.raises(GuardExceededError):
        intersect_curves(cubic_graph(f5), line(1, 0, 0, f5))


def test_exhaustive_search_finds_first_form(f7):
    curve = multiply(multiply(line(1, 0, 0, f7), line(0, 1, 0, f7)), line(1, 1, 1, f7))
    factor = exhaustive_linear_factor_search(curve, f7)
    assert (factor.a, factor.b, factor.c) == (1, 0, 0)


def test_exhaustive_search_conjugate_lines(f7):
    curve = CurveCoeffs.from_monomials({(3, 0): 1, (0, 0): -2}, f7)
    assert exhaustive_linear_factor_search(curve, f7) is None
    assert exhaustive_linear_factor_search(curve, find_cubic_modulus(f7)) is not None


def test_exhaustive_search_irreducible_in_extension(f5, cubic_graph):
    assert exhaustive_linear_factor_search(cubic_graph(f5), find_cubic_modulus(f5)) is None


def test_exhaustive_search_guards(f7, cubic_graph):
    with pytest.raises(InvalidInputError):
        exhaustive_linear_factor_search(line(1, 0, 0, f7), f7)
    with pytest.raises(ModulusMismatchError):
        exhaustive_linear_factor_search(cubic_graph(f7), PrimeModulus(5))
    big = PrimeModulus(1031)
    with pytest.raises(GuardExceededError):
        exhaustive_linear_factor_search(cubic_graph(big), find_cubic_modulus(big))


@settings(derandomize=True, max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=4, max_size=4).filter(any), st.data())
def test_root_search_agrees_with_exhaustive_scan(cubic_part, data):
    f7 = PrimeModulus(7)
    lower = data.draw(st.lists(st.integers(0, 6), min_size=6, max_size=6))
    curve = CurveCoeffs((*lower, *cubic_part), f7)
    fast = find_linear_factor(curve)
    slow = exhaustive_linear_factor_search(curve, f7)
    assert (fast is None) == (slow is None)


def test_bezout_trial_rows():
    rows = bezout_trial(11, 0, 0)
    assert [row.kind for row in rows] == list(PairKind)
    assert all(row.ok for row in rows)
    assert [row.cap for row in rows] == [9, 3, 6]


def test_bezout_campaign_is_thread_independent():
    single = bezout_campaign(11, 4, 3, threads=1)
    pooled = bezout_campaign(11, 4, 3, threads=2)
    assert single.ok
    assert len(single.rows) == 12
    assert single.rows == pooled.rows
    assert all(size <= kind.cap for kind, size in single.max_observed.items())


def test_bezout_campaign_guards():
    with pytest.raises(GuardExceededError):
        bezout_campaign(37, 1, 0)
    with pytest.raises(InvalidInputError):
        bezout_campaign(11, -1, 0)


def test_write_bezout_rows(tmp_path):
    path = tmp_path / "bezout.csv"
    write_bezout_rows(path, bezout_trial(7, 1, 0))
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(BEZOUT_CSV_HEADER)
    assert lines[1].startswith("0,cubic/cubic,")
    assert all(row.endswith(",true") for row in lines[1:])


def _exhaustive_class(curve):
    if exhaustive_linear_factor_search(curve, curve.modulus) is not None:
        return IrreducibilityClass.REDUCIBLE_RATIONAL
    if exhaustive_linear_factor_search(curve, find_cubic_modulus(curve.modulus)) is not None:
        return IrreducibilityClass.CONJUGATE_LINES
    return IrreducibilityClass.ABSOLUTELY_IRREDUCIBLE


def _random_cubics(modulus, count, rng):
    curves = []
    while len(curves) < count:
        values = [int(c) for c in rng.integers(0, modulus.p, size=10)]
        if any(values[6:]):
            curves.append(CurveCoeffs(tuple(values), modulus))
    return curves


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_classifier_agrees_with_exhaustive_scan(p):
    modulus = PrimeModulus(p)
    curves = [
        multiply(multiply(line(1, 0, 0, modulus), line(0, 1, 0, modulus)), line(1, 1, 1, modulus)),
        CurveCoeffs.from_monomials({(3, 0): 1, (0, 0): -2}, modulus),
        CurveCoeffs.from_monomials({(3, 0): 1, (0, 3): 1, (0, 0): 1}, modulus),
        CurveCoeffs.from_monomials({(0, 1): 1, (3, 0): -1}, modulus),
        *_random_cubics(modulus, 6, np.random.default_rng(p)),
    ]
    for curve in curves:
        assert curve.classification is _exhaustive_class(curve), str(curve)


def _random_instance(seed):
    p = (3, 5, 7, 11, 13)[seed % 5]
    modulus = PrimeModulus(p)
    rng = np.random.default_rng(seed)
    points = uniform_points(int(rng.integers(1, min(200, p * p) + 1)), modulus, rng)

    curves: dict[CurveCoeffs, None] = {}
    target = int(rng.integers(1, 201))
    while len(curves) < target:
        values = [int(c) for c in rng.integers(0, p, size=10)]
        if any(values):
            curves.setdefault(CurveCoeffs(tuple(values), modulus), None)
    return PointSet(tuple(points), modulus), CurveSet(tuple(curves), modulus)


@pytest.mark.parametrize("seed", range(100))
def test_engine_matches_naive_count_on_seeded_instances(seed):
    points, curves = _random_instance(seed)
    assert count_incidences(points, curves) == naive_count_incidences(points, curves)
