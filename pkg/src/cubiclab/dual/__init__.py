"""Projective duality between cubic curves and points of P^9."""

from cubiclab.dual.maps import (
    check_independent_conditions,
    dual_incidence,
    dual_line_row,
    flat_coordinates,
    flat_of,
    flat_point,
    flat_rows,
    hyperplane_of_point,
    intersect_hyperplanes,
    line_multiplicities,
    max_collinear,
    on_common_conic,
    phi,
    psi,
)
from cubiclab.dual.models import (
    Degenerate,
    DualLine,
    DualPoint,
    Flat2,
    Hyperplane,
    NotAFlat,
    SolutionSpace,
)

__all__ = [
    "Degenerate",
    "DualLine",
    "DualPoint",
    "Flat2",
    "Hyperplane",
    "NotAFlat",
    "SolutionSpace",
    "check_independent_conditions",
    "dual_incidence",
    "dual_line_row",
    "flat_coordinates",
    "flat_of",
    "flat_point",
    "flat_rows",
    "hyperplane_of_point",
    "intersect_hyperplanes",
    "line_multiplicities",
    "max_collinear",
    "on_common_conic",
    "phi",
    "psi",
]
