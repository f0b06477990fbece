"""Tests for the end-to-end certificate of the rich-curve argument."""

import pytest

from cubiclab.errors import InvalidInputError
from cubiclab.experiments import (
    SUBSET_CSV_HEADER,
    CurveKind,
    InstanceSpec,
    PointKind,
    ReportRenderer,
    generate_instance,
    pipeline_certificate,
    richness_floor,
    write_subset_records,
)
from cubiclab.incidence import CurveSet, PointSet, SubsetMode


@pytest.fixture
def graph_instance(f13, cubic_graph, graph_points):
    """All 13 points of y = x^3 over GF(13) against the graph itself."""
    points = PointSet(tuple(graph_points(f13)), f13)
    curves = CurveSet((cubic_graph(f13),), f13, irreducible=True)
    return points, curves


def test_richness_floor():
    assert richness_floor(11) == 2
    assert richness_floor(12) == 3
    assert richness_floor(13) == 3


def test_single_rich_curve(graph_instance):
    points, curves = graph_instance
    report = pipeline_certificate(points, curves, 11)
    assert report.ok, report.violations
    assert report.subset_mode is SubsetMode.EXHAUSTIVE
    assert report.rich_count == 1
    assert report.histogram == {13: 1}
    # every 7-subset of the 13 points lies on the curve
    assert report.counting_identity == (1716, 1716, 330)
    assert len(report.records) == 1716
    assert report.flat_successes == 1716
    assert report.rank_outcomes == {7: 1716}
    assert report.degenerate_count == 0
    assert 1 <= report.max_multiplicity <= 2
    assert report.max_rich_through == 1
    for record in report.records[:20]:
        assert record.min_dual_richness >= 3
        assert record.rich_dual_points >= 1


def test_adversarial_instance():
    spec = InstanceSpec(
        p=31,
        point_kind=PointKind.ON_CURVES_ADVERSARIAL,
        curve_kind=CurveKind.THROUGH_COMMON_POINTS,
        n_points=15,
        n_curves=2,
        seed=3,
        carrier_curves=2,
    )
    points, curves = generate_instance(spec)
    report = pipeline_certificate(points, curves, 11)
    assert report.ok, report.violations
    assert report.rich_count == 2
    assert report.max_rich_through == 2
    identity = report.counting_identity
    assert identity[0] == identity[1] >= identity[2]


def test_no_rich_curves(f13, cubic_graph, graph_points):
    points = PointSet(tuple(graph_points(f13)[:8]), f13)
    curves = CurveSet((cubic_graph(f13),), f13, irreducible=True)
    report = pipeline_certificate(points, curves, 11)
    assert report.ok
    assert report.rich_count == 0
    assert report.records == []
    assert report.counting_identity == (0, 0, 0)


def test_sampled_mode(tmp_path, graph_instance):
    from cubiclab.env import use_config

    config = tmp_path / "cubiclab.yaml"
    config.write_text("sampling:\n  subset_enumeration_limit: 10\n")
    use_config(config)

    points, curves = graph_instance
    report = pipeline_certificate(points, curves, 11, subset_samples=15, seed=5)
    assert report.ok
    assert report.subset_mode is SubsetMode.SAMPLED
    assert report.counting_identity is None
    assert 1 <= len(report.records) <= 30

    again = pipeline_certificate(points, curves, 11, subset_samples=15, seed=5)
    assert [r.subset for r in again.records] == [r.subset for r in report.records]


def test_guards(graph_instance, f13, cubic_graph):
    points, curves = graph_instance
    with pytest.raises(InvalidInputError):
        pipeline_certificate(points, curves, 10)
    with pytest.raises(InvalidInputError):
        pipeline_certificate(points, CurveSet((cubic_graph(f13),), f13), 11)


def test_subset_records_and_summary(tmp_path, graph_instance):
    points, curves = graph_instance
    report = pipeline_certificate(points, curves, 11)

    path = tmp_path / "subsets.csv"
    write_subset_records(path, report.records)
    lines = path.read_text().splitlines()
    assert lines[0] == ",".join(SUBSET_CSV_HEADER)
    assert lines[1].startswith("0 1 2 3 4 5 6,1,7,")
    assert len(lines) == 1 + len(report.records)

    text = ReportRenderer().render("certificate.md", report.to_context())
    assert "# Certificate: GF(13), k = 11" in text
    assert "1716 = 1716 >= 330" in text
    assert "None." in text
