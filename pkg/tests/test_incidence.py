"""Tests for incidence counting, richness classes and subset planning."""

import numpy as np
import pytest

from cubiclab.curves import AffinePoint, line, translate
from cubiclab.dual import DualLine
from cubiclab.env import get_settings, use_config
from cubiclab.errors import InvalidInputError, ModulusMismatchError
from cubiclab.field import PrimeModulus
from cubiclab.incidence import (
    CurveSet,
    PointSet,
    SubsetMode,
    count_incidences,
    dual_point_richness,
    dyadic_decomposition,
    exactly_rich_curves,
    incidence_counts_per_curve,
    incident_points_per_curve,
    rich_curves,
    rich_curves_through,
    rich_dual_points,
    richness_histogram,
    seven_subsets,
    write_counts,
)
from cubiclab.oracle import naive_count_incidences


@pytest.fixture
def instance(f13, cubic_graph, graph_points):
    """The 13 points of y = x^3 against the graph, two horizontal lines, x = 0 and a translate.

    Counts per curve: 13, 1, 3, 1, 0.
    """
    graph = cubic_graph(f13)
    points = PointSet(tuple(graph_points(f13)), f13)
    lines = (line(0, 1, 0, f13), line(0, 1, -1, f13), line(1, 0, 0, f13))
    curves = CurveSet((graph, *lines, translate(graph, 0, 1)), f13)
    return points, curves


def test_counts_per_curve(instance):
    points, curves = instance
    assert incidence_counts_per_curve(points, curves) == [13, 1, 3, 1, 0]
    assert count_incidences(points, curves) == 18
    assert naive_count_incidences(points, curves) == 18


def test_counts_independent_of_threads(instance):
    points, curves = instance
    assert incidence_counts_per_curve(points, curves, threads=2) == [13, 1, 3, 1, 0]
    assert incidence_counts_per_curve(points, curves, threads=4) == [13, 1, 3, 1, 0]


def test_small_blocks_give_same_counts(tmp_path, instance):
    points, curves = instance
    config = tmp_path / "cubiclab.yaml"
    config.write_text("engine:\n  block_pairs: 3\n")
    use_config(config)
    assert get_settings().engine.block_pairs == 3
    assert incidence_counts_per_curve(points, curves) == [13, 1, 3, 1, 0]


def test_invalid_threads(instance):
    points, curves = instance
    with pytest.raises(InvalidInputError):
        count_incidences(points, curves, threads=0)


def test_empty_sets(f13):
    assert count_incidences(PointSet((), f13), CurveSet((line(1, 0, 0, f13),), f13)) == 0
    assert count_incidences(PointSet((AffinePoint(0, 0, f13),), f13), CurveSet((), f13)) == 0


def test_large_prime_uses_exact_arithmetic(cubic_graph):
    modulus = PrimeModulus(2**61 - 1)
    points = PointSet((AffinePoint(1, 1, modulus), AffinePoint(2, 8, modulus)), modulus)
    curves = CurveSet((cubic_graph(modulus),), modulus)
    assert points.monomials.dtype == np.dtype(object)
    assert count_incidences(points, curves) == 2


def test_field_mismatch(f7, f13, cubic_graph, graph_points):
    points = PointSet(tuple(graph_points(f13)), f13)
    with pytest.raises(ModulusMismatchError):
        count_incidences(points, CurveSet((cubic_graph(f7),), f7))


def test_point_set_rejects_duplicates(f7):
    q = AffinePoint(1, 2, f7)
    with pytest.raises(InvalidInputError):
        PointSet((q, q), f7)


def test_irreducible_curve_set_is_checked(f13, cubic_graph):
    assert CurveSet((cubic_graph(f13),), f13, irreducible=True).irreducible
    with pytest.raises(InvalidInputError):
        CurveSet((cubic_graph(f13), line(1, 1, 0, f13)), f13, irreducible=True)


def test_incident_points_per_curve(instance):
    points, curves = instance
    incident = incident_points_per_curve(points, curves)
    assert incident[0] == list(range(13))
    assert incident[2] == [1, 3, 9]
    assert incident[4] == []


def test_write_counts(tmp_path, instance):
    points, curves = instance
    path = tmp_path / "out" / "counts.csv"
    write_counts(path, incidence_counts_per_curve(points, curves))
    assert path.read_text().splitlines() == [
        "curve_index,count",
        "0,13",
        "1,1",
        "2,3",
        "3,1",
        "4,0",
    ]


def test_rich_curves(instance):
    points, curves = instance
    assert rich_curves(points, curves, 1).members == (1, 3)
    assert rich_curves(points, curves, 2).members == (2,)
    seven = rich_curves(points, curves, 7)
    assert seven.members == (0,)
    assert seven.counts == (13,)
    assert seven.member_curves() == [curves[0]]
    with pytest.raises(InvalidInputError):
        rich_curves(points, curves, 0)


def test_exactly_rich_and_histogram(instance):
    points, curves = instance
    assert exactly_rich_curves(points, curves, 1) == [1, 3]
    assert exactly_rich_curves(points, curves, 5) == []
    assert richness_histogram(points, curves) == {0: 1, 1: 2, 3: 1, 13: 1}


def test_rich_curves_through(instance):
    points, curves = instance
    richclass = rich_curves(points, curves, 7)
    assert rich_curves_through(richclass, points.points[:7]) == [0]


def test_rich_curves_through_validates_subset(instance, f13):
    points, curves = instance
    richclass = rich_curves(points, curves, 7)
    with pytest.raises(InvalidInputError):
        rich_curves_through(richclass, points.points[:6])
    outside = (*points.points[:6], AffinePoint(0, 5, f13))
    with pytest.raises(InvalidInputError):
        rich_curves_through(richclass, outside)


def test_dyadic_decomposition(instance):
    points, curves = instance
    split = dyadic_decomposition(points, curves, 2)
    assert split.low_sum == 2
    assert split.high_sum == 16
    assert split.classes == ((2, 1), (8, 1))
    assert split.low_cap == 10
    assert split.high_cap == 20
    assert split.holds
    with pytest.raises(InvalidInputError):
        dyadic_decomposition(points, curves, 0)


def test_dual_point_richness(f7):
    q = [AffinePoint(i, 0, f7) for i in range(5)]
    lines = [
        DualLine((1, 0, 0), q[0]),
        DualLine((0, 1, 0), q[1]),
        DualLine((1, 1, 0), q[2]),
        DualLine((0, 0, 1), q[3]),
        DualLine((1, 0, 0), q[4]),
    ]
    richness = dual_point_richness(lines)
    assert richness[(0, 0, 1)] == 3
    assert rich_dual_points(lines, 3) == 1
    assert rich_dual_points(lines, 2) == len(richness)
    with pytest.raises(InvalidInputError):
        rich_dual_points(lines, 1)
    assert dual_point_richness([]) == {}


def test_seven_subsets_exhaustive():
    rng = np.random.default_rng(0)
    plan = seven_subsets(8, [list(range(8)), [0, 1, 2]], 10, rng, enumeration_limit=10**6)
    assert plan.mode is SubsetMode.EXHAUSTIVE
    assert len(plan.subsets) == 8
    assert plan.subsets == sorted(plan.subsets)


def test_seven_subsets_sampled():
    rng = np.random.default_rng(0)
    plan = seven_subsets(20, [list(range(10))], 5, rng, enumeration_limit=0)
    assert plan.mode is SubsetMode.SAMPLED
    assert 1 <= len(plan.subsets) <= 10
    assert len(set(plan.subsets)) == len(plan.subsets)
    for subset in plan.subsets:
        assert len(subset) == 7
        assert list(subset) == sorted(set(subset))


def test_seven_subsets_rejects_negative_samples():
    with pytest.raises(InvalidInputError):
        seven_subsets(20, [], -1, np.random.default_rng(0), enumeration_limit=0)
