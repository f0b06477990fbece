"""Bound reports for concrete instances and for grid sweeps over instance sizes."""

import logging
from collections.abc import Sequence

from cubiclab.bounds import BoundReport, build_bound_report
from cubiclab.experiments.instances import CurveKind, InstanceSpec, PointKind, generate_instance
from cubiclab.incidence import CurveSet, PointSet, count_incidences

logger = logging.getLogger(__name__)


def bound_report(points: PointSet, curves: CurveSet, threads: int | None = None) -> BoundReport:
    """Measure I(P, C) and evaluate every bound at (|P|, |C|)."""
    measured = count_incidences(points, curves, threads)
    report = build_bound_report(points.modulus.p, len(points), len(curves), measured)
    logger.info(f"Bound report for |P|={len(points)}, |C|={len(curves)}: I={measured}")
    return report


def bound_report_sweep(
    p: int,
    point_sizes: Sequence[int],
    curve_sizes: Sequence[int],
    seed: int,
    threads: int | None = None,
) -> list[BoundReport]:
    """One report per (|P|, |C|) pair, on grid points against uniform irreducible cubics.

    Args:
        p: Prime field size
        point_sizes: Values of |P|, each at most p^2
        curve_sizes: Values of |C|
        seed: Seed of every generated instance
        threads: Worker processes for the counting engine

    Returns:
        Reports in (|P|, |C|) row-major order
    """
    reports = []
    for m in point_sizes:
        for n in curve_sizes:
            spec = InstanceSpec(
                p=p,
                point_kind=PointKind.GRID,
                curve_kind=CurveKind.UNIFORM_IRREDUCIBLE,
                n_points=m,
                n_curves=n,
                seed=seed,
            )
            points, curves = generate_instance(spec)
            reports.append(bound_report(points, curves, threads))
    return reports
