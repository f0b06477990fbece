"""Brute-force reference implementations for differential testing."""

from cubiclab.oracle.bezout import (
    BEZOUT_CSV_HEADER,
    BezoutRow,
    BezoutSummary,
    PairKind,
    bezout_campaign,
    bezout_trial,
    write_bezout_rows,
)
from cubiclab.oracle.brute import (
    IntersectionRecord,
    exhaustive_linear_factor_search,
    intersect_curves,
    naive_count_incidences,
)

__all__ = [
    "BEZOUT_CSV_HEADER",
    "BezoutRow",
    "BezoutSummary",
    "IntersectionRecord",
    "PairKind",
    "bezout_campaign",
    "bezout_trial",
    "exhaustive_linear_factor_search",
    "intersect_curves",
    "naive_count_incidences",
    "write_bezout_rows",
]
