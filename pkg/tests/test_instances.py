"""Tests for the seeded instance generators."""

import numpy as np
import pytest

from cubiclab.curves import AffinePoint, rational_points
from cubiclab.errors import InvalidInputError
from cubiclab.experiments import CurveKind, InstanceSpec, PointKind, generate_instance
from cubiclab.experiments.instances import grid_points, uniform_points
from cubiclab.incidence import (
    count_incidences,
    incidence_counts_per_curve,
    incident_points_per_curve,
)


def _spec(**overrides):
    values = {
        "p": 31,
        "point_kind": PointKind.UNIFORM_RANDOM,
        "curve_kind": CurveKind.UNIFORM_IRREDUCIBLE,
        "n_points": 20,
        "n_curves": 4,
        "seed": 7,
    }
    values.update(overrides)
    return InstanceSpec(**values)


def test_same_spec_same_instance():
    assert generate_instance(_spec()) == generate_instance(_spec())
    assert generate_instance(_spec()) != generate_instance(_spec(seed=8))


def test_uniform_instance_is_irreducible():
    points, curves = generate_instance(_spec())
    assert len(points) == 20
    assert len(curves) == 4
    assert curves.irreducible


def test_grid_points():
    points, _ = generate_instance(_spec(p=11, point_kind=PointKind.GRID, n_points=25, n_curves=0))
    assert {q.key for q in points} == {(x, y) for x in range(5) for y in range(5)}


def test_grid_prefix(f5, f13):
    points = grid_points(10, f13)
    assert points[:5] == [AffinePoint(0, y, f13) for y in range(4)] + [AffinePoint(1, 0, f13)]
    with pytest.raises(InvalidInputError):
        grid_points(26, f5)


def test_uniform_points_dense_draw(f5):
    points = uniform_points(20, f5, np.random.default_rng(0))
    assert len(set(points)) == 20


def test_translate_family_preserves_point_counts():
    _, curves = generate_instance(_spec(p=13, curve_kind=CurveKind.TRANSLATE_FAMILY, n_curves=5))
    sizes = {len(rational_points(curve)) for curve in curves}
    assert len(sizes) == 1


def test_through_common_points_share_seven_points():
    points, curves = generate_instance(_spec(curve_kind=CurveKind.THROUGH_COMMON_POINTS))
    incident = [set(indices) for indices in incident_points_per_curve(points, curves)]
    assert len(set.intersection(*incident)) >= 7


def test_adversarial_points_lie_on_rich_carriers():
    spec = _spec(
        point_kind=PointKind.ON_CURVES_ADVERSARIAL,
        curve_kind=CurveKind.THROUGH_COMMON_POINTS,
        n_points=15,
        n_curves=2,
        carrier_curves=2,
    )
    points, curves = generate_instance(spec)
    assert len(points) == 15
    assert min(incidence_counts_per_curve(points, curves)) >= 11


def test_reducible_counterexample_is_saturated():
    spec = _spec(p=53, n_points=50, n_curves=50, reducible_counterexample=True)
    points, curves = generate_instance(spec)
    assert not curves.irreducible
    assert count_incidences(points, curves) == 50 * 50
    assert all(not curve.is_irreducible_cubic for curve in curves)


@pytest.mark.parametrize(
    "overrides",
    [
        {"n_points": -1},
        {"carrier_curves": 0},
        {"p": 5, "n_points": 26},
        {"p": 5, "n_points": 6, "reducible_counterexample": True},
        {"p": 5, "curve_kind": CurveKind.TRANSLATE_FAMILY, "n_points": 3, "n_curves": 26},
    ],
)
def test_infeasible_specs(overrides):
    with pytest.raises(InvalidInputError):
        generate_instance(_spec(**overrides))
