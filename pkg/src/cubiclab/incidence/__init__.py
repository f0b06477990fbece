"""Incidence counting, richness classes and 7-subset handling."""

from cubiclab.incidence.engine import (
    COUNTS_CSV_HEADER,
    count_incidences,
    incidence_counts_per_curve,
    incident_points_per_curve,
    write_counts,
)
from cubiclab.incidence.models import CurveSet, PointSet, RichnessClass
from cubiclab.incidence.richness import (
    DyadicDecomposition,
    dual_point_richness,
    dyadic_decomposition,
    exactly_rich_curves,
    rich_curves,
    rich_curves_through,
    rich_dual_points,
    richness_histogram,
)
from cubiclab.incidence.subsets import SubsetMode, SubsetPlan, seven_subsets

__all__ = [
    "COUNTS_CSV_HEADER",
    "CurveSet",
    "DyadicDecomposition",
    "PointSet",
    "RichnessClass",
    "SubsetMode",
    "SubsetPlan",
    "count_incidences",
    "dual_point_richness",
    "dyadic_decomposition",
    "exactly_rich_curves",
    "incidence_counts_per_curve",
    "incident_points_per_curve",
    "rich_curves",
    "rich_curves_through",
    "rich_dual_points",
    "richness_histogram",
    "seven_subsets",
    "write_counts",
]
