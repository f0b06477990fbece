"""Closed-form incidence bounds and bound reports."""

from cubiclab.bounds.evaluators import (
    MIN_RICHNESS,
    admissible,
    ck_bound,
    cks_bound,
    delta_branch,
    delta_opt,
    dyadic_bound,
    dyadic_series_bound,
    improvement_range,
    kst_bound,
    kst_branch,
    kst_line_bound,
    sdz_line_bound,
    sdz_rich_points_bound,
    theorem1_bound,
    theorem1_branch,
    theorem2_bound,
)
from cubiclab.bounds.report import (
    BOUND_CSV_HEADER,
    BoundReport,
    bound_reports_csv,
    build_bound_report,
    write_bound_reports,
)

__all__ = [
    "BOUND_CSV_HEADER",
    "MIN_RICHNESS",
    "BoundReport",
    "admissible",
    "bound_reports_csv",
    "build_bound_report",
    "ck_bound",
    "cks_bound",
    "delta_branch",
    "delta_opt",
    "dyadic_bound",
    "dyadic_series_bound",
    "improvement_range",
    "kst_bound",
    "kst_branch",
    "kst_line_bound",
    "sdz_line_bound",
    "sdz_rich_points_bound",
    "theorem1_bound",
    "theorem1_branch",
    "theorem2_bound",
    "write_bound_reports",
]
